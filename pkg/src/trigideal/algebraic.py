"""Exact algebraic numbers and the Q-linear structure of point tuples.

A number is a squarefree primitive integer annihilator plus a certified
isolating box.  Sums and rational multiples are computed through
resultants, so annihilators (not minimal polynomials) are enough:
zero testing and separation bounds only need squarefreeness.  On top of
that sit the certified zero test, LLL-based detection of Q-linear
relations, and extraction of a Q-basis of the span of the inputs with
integer coordinates over a common denominator.
"""

import math
from fractions import Fraction

from .errors import (
    ConstantPolynomial,
    NonConvergence,
    NotIsolating,
    PrecisionExhausted,
    TrigIdealError,
)
from .lattice import lll_reduce, norm_sq
from .numerics import ComplexBox, cb_add, dy_to_fraction, refine_root

TIGHT_WIDTH = Fraction(1, 1 << 64)


# ---------------------------------------------------------------------------
# integer / rational univariate polynomial helpers (coefficient lists, low
# degree first)


def _strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _primitive(p):
    """Content 1 and positive leading coefficient."""
    p = _strip(p)
    if not p:
        return []
    g = 0
    for c in p:
        g = math.gcd(g, abs(c))
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _fdivmod(a, b):
    """Exact division with remainder over Fractions."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        f = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def _fgcd(a, b):
    a = [Fraction(c) for c in _strip(a)]
    b = [Fraction(c) for c in _strip(b)]
    while b:
        _, r = _fdivmod(a, b)
        a, b = b, _strip(r)
    return a


def _clear_denominators(p):
    den = math.lcm(*[c.denominator for c in p]) if p else 1
    return [int(c * den) for c in p]


def squarefree_primitive(p):
    """Squarefree part of an integer polynomial, primitive, positive lc."""
    p = _primitive(p)
    if len(p) <= 2:
        return p
    g = _fgcd(p, _derivative(p))
    if len(g) <= 1:
        return p
    q, _ = _fdivmod(p, g)
    return _primitive(_clear_denominators(q))


def _bareiss_det(rows):
    """Exact integer determinant, fraction-free Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _sylvester_det(f, g):
    """Resultant of two integer polynomials in one variable."""
    m = len(f) - 1
    n = len(g) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    frev = f[::-1]
    grev = g[::-1]
    rows = [[0] * i + frev + [0] * (size - m - i) for i in range(n)]
    rows += [[0] * i + grev + [0] * (size - n - i) for i in range(m)]
    return _bareiss_det(rows)


def _compose_shift(g, x0):
    """Coefficients in y of g(x0 - y)."""
    acc = [g[-1]]
    for b in reversed(g[:-1]):
        new = [0] * (len(acc) + 1)
        for i, c in enumerate(acc):
            new[i] += c * x0
            new[i + 1] -= c
        new[0] += b
        acc = new
    return acc


def _interpolate(xs, ys):
    """Newton divided differences; exact coefficient list, low degree first."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc = [coef[-1]]
    for k in range(n - 2, -1, -1):
        new = [Fraction(0)] * (len(acc) + 1)
        for i, c in enumerate(acc):
            new[i] -= c * xs[k]
            new[i + 1] += c
        new[0] += coef[k]
        acc = new
    return acc


def _sum_annihilator(f, g):
    """Annihilator of a+b from annihilators of a and b.

    Res_y(f(y), g(x-y)) vanishes at every sum of roots; it is computed
    by evaluating the Sylvester determinant at deg(f)*deg(g)+1 integer
    points and interpolating exactly.
    """
    m = len(f) - 1
    n = len(g) - 1
    count = m * n + 1
    xs = [0]
    step = 1
    while len(xs) < count:
        xs.append(step)
        if len(xs) < count:
            xs.append(-step)
        step += 1
    ys = [_sylvester_det(f, _compose_shift(g, x0)) for x0 in xs]
    return _clear_denominators(_interpolate(xs, ys))


def _scale_annihilator(f, c):
    """Annihilator of c*alpha for rational c != 0: f(x/c) with denominators
    cleared, i.e. coefficient a_i becomes a_i * q**i * p**(m-i) for c = p/q."""
    p, q = c.numerator, c.denominator
    m = len(f) - 1
    return _primitive([f[i] * q ** i * p ** (m - i) for i in range(m + 1)])


# ---------------------------------------------------------------------------
# algebraic numbers


class AlgebraicNumber:
    """A root of an integer polynomial pinned down by an isolating box.

    The annihilator is stored squarefree, primitive, with positive
    leading coefficient; the box is certified to isolate exactly one
    root at construction and refined to width <= 2**-64.
    """

    __slots__ = ("annihilator", "box", "degree_bound", "_tight")

    def __init__(self, annihilator, box):
        p = _strip([int(c) for c in annihilator])
        if len(p) <= 1:
            raise ConstantPolynomial("annihilator must be nonconstant")
        p = squarefree_primitive(p)
        try:
            refined = refine_root(p, box, TIGHT_WIDTH)
        except NonConvergence as exc:
            raise NotIsolating(str(exc)) from exc
        self.annihilator = tuple(p)
        self.box = refined
        self.degree_bound = len(p) - 1
        self._tight = refined

    @classmethod
    def from_rational(cls, value):
        value = Fraction(value)
        box = ComplexBox.from_fractions(value, value)
        return cls([-value.numerator, value.denominator], box)

    @classmethod
    def from_int(cls, n):
        return cls.from_rational(Fraction(n))

    def refined(self, target_width):
        """An isolating box of width <= target_width (monotone cache)."""
        target = Fraction(target_width)
        if self._tight.width() <= target:
            return self._tight
        out = refine_root(list(self.annihilator), self._tight, target)
        self._tight = out
        return out

    def __repr__(self):
        return "AlgebraicNumber(%r, ~%s)" % (list(self.annihilator), self.box)


def alg_parse(annihilator, approx):
    """Build a normalized AlgebraicNumber from raw coefficients and a box."""
    return AlgebraicNumber(annihilator, approx)


def alg_combination(coeffs, numbers):
    """The number sum(c_i * alpha_i) for rational c_i.

    Annihilators are combined by iterated resultants with the squarefree
    part taken after every step; boxes are added in interval arithmetic
    and re-isolated, shrinking the inputs whenever the sum box fails to
    isolate a single root.
    """
    if not numbers or len(coeffs) != len(numbers):
        raise ValueError("coefficient and number lists must match, nonempty")
    terms = [
        (Fraction(c), num) for c, num in zip(coeffs, numbers) if Fraction(c) != 0
    ]
    if not terms:
        return AlgebraicNumber([0, 1], ComplexBox.point_int(0))
    scaled = [_scaled_number(c, num) for c, num in terms]
    acc = scaled[0]
    for nxt in scaled[1:]:
        acc = _add_numbers(acc, nxt)
    return acc


def _canonicalized(num):
    """Collapse a number certified zero to the annihilator x at the origin."""
    if num.annihilator[0] == 0 and is_zero(num):
        return AlgebraicNumber([0, 1], ComplexBox.point_int(0))
    return num


def _scaled_number(c, num):
    if c == 1:
        return num
    ann = _scale_annihilator(list(num.annihilator), c)
    box = num.box
    res = sorted((box.re_lo * c, box.re_hi * c))
    ims = sorted((box.im_lo * c, box.im_hi * c))
    scaled_box = ComplexBox.from_fractions(res[0], res[1], ims[0], ims[1], 192)
    return AlgebraicNumber(ann, scaled_box)


def _add_numbers(a, b):
    ann = squarefree_primitive(
        _sum_annihilator(list(a.annihilator), list(b.annihilator))
    )
    width = TIGHT_WIDTH
    for _ in range(60):
        sum_box = cb_add(a.refined(width), b.refined(width), 256)
        try:
            return _canonicalized(AlgebraicNumber(ann, sum_box))
        except NotIsolating:
            width /= 16
    raise PrecisionExhausted("sum box failed to isolate a root of the resultant")


def is_zero(gamma):
    """Exact test gamma == 0.

    Write the annihilator as x**m * B with B(0) != 0.  If m == 0 then 0
    is not a root at all.  Otherwise every nonzero root of B has modulus
    at least L = |b0| / (|b0| + max_i |b_i|), so the box is refined until
    it either excludes 0 or is trapped strictly inside modulus L.
    """
    p = list(gamma.annihilator)
    if p[0] != 0:
        return False
    m = 0
    while p[m] == 0:
        m += 1
    b = p[m:]
    b0 = abs(b[0])
    lbound = Fraction(b0, b0 + max(abs(c) for c in b))
    l2 = lbound * lbound
    box = gamma.box
    while True:
        if box.abs_sq_lo() > 0:
            return False
        if box.abs_sq_hi() < l2:
            return True
        box = gamma.refined(box.width() / 4)


# ---------------------------------------------------------------------------
# Q-linear dependence and basis extraction


def find_dependence(numbers, height_bound=65536, start_bits=192, max_bits=16384):
    """A certified integer relation sum(c_i alpha_i) = 0, or None.

    Candidate short vectors come from LLL reduction of the rows
    [e_i | round(N Re x_i) | round(N Im x_i)] at growing precision; every
    candidate is verified exactly by is_zero.  A None answer is backed
    by the reduction quality bound: any relation of coefficient height
    at most height_bound yields a lattice vector of squared norm at most
    R^2 = n H^2 + 2 (n H)^2, so |b1|^2 > 2**(n-1) R^2 excludes them all.
    """
    if not numbers:
        raise ValueError("empty number list")
    n = len(numbers)
    height = int(height_bound)
    if height < 1:
        raise ValueError("height bound must be positive")
    r2 = n * height * height + 2 * (n * height) ** 2
    rejected = set()
    bits = start_bits
    while bits <= max_bits:
        scale = 1 << bits
        width = Fraction(1, scale)
        rows = []
        for i, num in enumerate(numbers):
            mre, mim = num.refined(width).mid()
            row = [0] * n + [
                round(dy_to_fraction(mre) * scale),
                round(dy_to_fraction(mim) * scale),
            ]
            row[i] = 1
            rows.append(row)
        reduced = lll_reduce(rows)
        for row in reduced:
            c = tuple(row[:n])
            if not any(c) or max(abs(x) for x in c) > height or c in rejected:
                continue
            if is_zero(alg_combination(c, numbers)):
                if next(x for x in c if x) < 0:
                    c = tuple(-x for x in c)
                return list(c)
            rejected.add(c)
        if norm_sq(reduced[0]) > (1 << (n - 1)) * r2:
            return None
        bits *= 2
    raise PrecisionExhausted(
        "no certified answer for relations of height <= %d at %d bits"
        % (height, max_bits)
    )


class AngleBasis:
    """A Q-basis of span(alpha_1..alpha_n) chosen among the inputs.

    Every input satisfies alpha_i = sum_j coords[i][j] * beta_j / denominator
    exactly; rows for basis members are denominator * (unit row).
    """

    __slots__ = ("basis_indices", "denominator", "coords")

    def __init__(self, basis_indices, denominator, coords):
        self.basis_indices = tuple(basis_indices)
        self.denominator = int(denominator)
        self.coords = tuple(tuple(int(x) for x in row) for row in coords)
        if self.denominator < 1:
            raise ValueError("denominator must be positive")

    @property
    def size(self):
        return len(self.basis_indices)

    def __eq__(self, other):
        if not isinstance(other, AngleBasis):
            return NotImplemented
        return (
            self.basis_indices == other.basis_indices
            and self.denominator == other.denominator
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.basis_indices, self.denominator, self.coords))

    def __repr__(self):
        return "AngleBasis(indices=%r, d=%d, coords=%r)" % (
            list(self.basis_indices),
            self.denominator,
            [list(r) for r in self.coords],
        )


def angle_basis(numbers, height_bound=65536):
    """Greedy left-to-right basis extraction with exact certificates.

    An input joins the basis unless find_dependence certifies a relation
    with the current basis; dependent inputs get coordinates recovered
    from the certified relation, zero inputs an all-zero row.  Every
    coordinate row is re-certified by is_zero on the difference.
    """
    if not numbers:
        raise ValueError("empty point list")
    basis_idx = []
    basis_nums = []
    rows = []
    for i, alpha in enumerate(numbers):
        if is_zero(alpha):
            rows.append([])
            continue
        rel = (
            find_dependence(basis_nums + [alpha], height_bound)
            if basis_nums
            else None
        )
        if rel is None:
            basis_idx.append(i)
            basis_nums.append(alpha)
            rows.append([Fraction(0)] * (len(basis_idx) - 1) + [Fraction(1)])
        else:
            *cs, clast = rel
            if clast == 0:
                raise TrigIdealError(
                    "relation among a basis certified independent"
                )
            rows.append([Fraction(-c, clast) for c in cs])
    k = len(basis_idx)
    rows = [r + [Fraction(0)] * (k - len(r)) for r in rows]
    denom = math.lcm(*[x.denominator for r in rows for x in r]) if k else 1
    coords = [[int(x * denom) for x in r] for r in rows]
    basis = AngleBasis(basis_idx, denom, coords)
    for i, alpha in enumerate(numbers):
        coeffs = [Fraction(1)] + [Fraction(-c, denom) for c in coords[i]]
        if not is_zero(alg_combination(coeffs, [alpha] + basis_nums)):
            raise TrigIdealError("coordinate row failed exact certification")
    return basis
