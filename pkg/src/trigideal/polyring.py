"""Sparse multivariate polynomials over Q in tagged trig variables.

Variables come in two blocks: point variables X_i, Y_i standing for the
cosine/sine values at the i-th input point, and basis-angle variables
W_j, Z_j standing for cosine/sine at the j-th basis angle over the
common denominator.  The internal exponent layout lists variables in
descending precedence: W1, Z1, ..., Wk, Zk, Xn, Yn, ..., X1, Y1, so
plain tuple comparison of exponent vectors is already the lex order and
the block elimination order only needs a reshaped key.
"""

import math
from fractions import Fraction

from . import _kernel as K
from .errors import RegistryMismatch


class VariableRegistry:
    """Declares n point-variable pairs (X_i, Y_i) and k basis pairs (W_j, Z_j)."""

    __slots__ = ("n", "k")

    def __init__(self, n, k=0):
        n = int(n)
        k = int(k)
        if n < 0 or k < 0 or n + k == 0:
            raise ValueError("registry needs at least one variable pair")
        self.n = n
        self.k = k

    @property
    def split(self):
        """Number of leading exponent slots held by the W/Z block."""
        return 2 * self.k

    @property
    def num_vars(self):
        return 2 * self.n + 2 * self.k

    def position(self, kind, index):
        """Exponent slot of a variable; kind in {X, Y, W, Z}, index 1-based."""
        if kind in ("W", "Z"):
            if not 1 <= index <= self.k:
                raise ValueError("basis index %d out of range" % index)
            return 2 * (index - 1) + (1 if kind == "Z" else 0)
        if kind in ("X", "Y"):
            if not 1 <= index <= self.n:
                raise ValueError("point index %d out of range" % index)
            return self.split + 2 * (self.n - index) + (1 if kind == "Y" else 0)
        raise ValueError("unknown variable kind %r" % kind)

    def name(self, pos):
        if pos < self.split:
            return ("W" if pos % 2 == 0 else "Z") + str(pos // 2 + 1)
        q = pos - self.split
        return ("X" if q % 2 == 0 else "Y") + str(self.n - q // 2)

    def display_positions(self):
        """Slot sequence for printing inside a term: X1 Y1 ... Z1 W1 ..."""
        out = []
        for i in range(1, self.n + 1):
            out.append(self.position("X", i))
            out.append(self.position("Y", i))
        for j in range(1, self.k + 1):
            out.append(self.position("Z", j))
            out.append(self.position("W", j))
        return out

    def zero_exp(self):
        return (0,) * self.num_vars

    def var(self, kind, index):
        e = [0] * self.num_vars
        e[self.position(kind, index)] = 1
        return MPoly(self, {tuple(e): Fraction(1)})

    def constant(self, value):
        value = Fraction(value)
        if value == 0:
            return MPoly(self, {})
        return MPoly(self, {self.zero_exp(): value})

    def __eq__(self, other):
        if not isinstance(other, VariableRegistry):
            return NotImplemented
        return self.n == other.n and self.k == other.k

    def __hash__(self):
        return hash((self.n, self.k))

    def __repr__(self):
        return "VariableRegistry(n=%d, k=%d)" % (self.n, self.k)


class MPoly:
    """Sparse polynomial: map from exponent tuple to nonzero Fraction."""

    __slots__ = ("registry", "terms")

    def __init__(self, registry, terms=None):
        clean = {}
        if terms:
            width = registry.num_vars
            for e, c in terms.items():
                if len(e) != width:
                    raise ValueError("exponent width %d, registry has %d" % (len(e), width))
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[tuple(e)] = c
        self.registry = registry
        self.terms = clean

    def _check(self, other):
        if self.registry != other.registry:
            raise RegistryMismatch("operands from different registries")

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((K.exp_deg(u) for u in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return self + self.registry.constant(other)
        self._check(other)
        out = dict(self.terms)
        K.sub_scaled(out, other.terms, Fraction(-1), self.registry.zero_exp())
        return MPoly(self.registry, out)

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return self - self.registry.constant(other)
        self._check(other)
        out = dict(self.terms)
        K.sub_scaled(out, other.terms, Fraction(1), self.registry.zero_exp())
        return MPoly(self.registry, out)

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MPoly(self.registry, {u: -c for u, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return MPoly(self.registry, K.mul_terms(self.terms, other.terms))
        scalar = Fraction(other)
        if scalar == 0:
            return MPoly(self.registry, {})
        return MPoly(self.registry, {u: c * scalar for u, c in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, power):
        power = int(power)
        if power < 0:
            raise ValueError("negative power")
        result = self.registry.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base_needed = power >> 1
            if base_needed:
                base = base * base
            power = base_needed
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.registry == other.registry and self.terms == other.terms

    def __hash__(self):
        return hash((self.registry, frozenset(self.terms.items())))

    def __repr__(self):
        order = MonomialOrder(
            "block_elim" if self.registry.k else "lex", self.registry
        )
        return "MPoly(%s)" % format_poly(self, order)


class MonomialOrder:
    """One of lex, grevlex, or the W/Z-eliminating block order.

    block_elim is grevlex on the (W, Z) block dominating lex on the
    (X, Y) block; lex on the full layout puts every W/Z variable above
    every X/Y variable, so it is an eliminating order as well.
    """

    KINDS = ("lex", "grevlex", "block_elim")
    _CODES = {"lex": K.KIND_LEX, "grevlex": K.KIND_GREVLEX, "block_elim": K.KIND_BLOCK}

    __slots__ = ("kind", "registry", "code")

    def __init__(self, kind, registry):
        if kind not in self._CODES:
            raise ValueError("unknown order kind %r" % kind)
        self.kind = kind
        self.registry = registry
        self.code = self._CODES[kind]

    def key(self, u):
        return K.monomial_key(self.code, self.registry.split, u)

    def compare(self, u, v):
        return K.monomial_cmp(self.code, self.registry.split, u, v)

    @property
    def eliminates_basis_vars(self):
        """Whether any monomial with W/Z support exceeds all W/Z-free ones."""
        return self.kind in ("block_elim", "lex")

    def __eq__(self, other):
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return self.kind == other.kind and self.registry == other.registry

    def __hash__(self):
        return hash((self.kind, self.registry))

    def __repr__(self):
        return "MonomialOrder(%r, %r)" % (self.kind, self.registry)


def order_compare(order, u, v):
    """Spec-level comparison: LT, EQ, or GT for exponent vectors u vs v."""
    u = tuple(u)
    v = tuple(v)
    width = order.registry.num_vars
    if len(u) != width or len(v) != width:
        raise ValueError("exponent width mismatch")
    c = order.compare(u, v)
    return "EQ" if c == 0 else ("GT" if c > 0 else "LT")


def poly_arith(op, f, g):
    """Dispatch table for ring arithmetic: add, sub, mul, scale."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f * Fraction(g)
    raise ValueError("unknown op %r" % op)


def leading_term(f, order):
    """(exponent, coefficient) of the order-largest term; f must be nonzero."""
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    u = K.leading_exp(order.code, order.registry.split, f.terms)
    return u, f.terms[u]


def multidivide(f, divisors, order):
    """Division with remainder by an ordered list of nonzero divisors.

    Returns (quotients, remainder) with f = sum q_i d_i + r exactly and
    no remainder term divisible by any divisor's leading term.
    """
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ValueError("zero divisor in multidivide")
    code, split = order.code, order.registry.split
    leads = []
    lcs = []
    for d in divisors:
        u, c = leading_term(d, order)
        leads.append(u)
        lcs.append(c)
    work = dict(f.terms)
    quots = [dict() for _ in divisors]
    rem = {}
    while work:
        u = K.leading_exp(code, split, work)
        i = K.find_divisor(leads, u)
        if i < 0:
            rem[u] = work.pop(u)
            continue
        q = work[u] / lcs[i]
        shift = K.exp_div(u, leads[i])
        cur = quots[i].get(shift)
        cur = q if cur is None else cur + q
        if cur:
            quots[i][shift] = cur
        elif shift in quots[i]:
            del quots[i][shift]
        K.sub_scaled(work, divisors[i].terms, q, shift)
    reg = f.registry
    return [MPoly(reg, qd) for qd in quots], MPoly(reg, rem)


def normal_form(f, divisors, order):
    """Remainder of multidivide without quotient bookkeeping."""
    for d in divisors:
        f._check(d)
    code, split = order.code, order.registry.split
    leads = []
    lcs = []
    for d in divisors:
        u, c = leading_term(d, order)
        leads.append(u)
        lcs.append(c)
    work = dict(f.terms)
    rem = {}
    while work:
        u = K.leading_exp(code, split, work)
        i = K.find_divisor(leads, u)
        if i < 0:
            rem[u] = work.pop(u)
            continue
        q = work[u] / lcs[i]
        K.sub_scaled(work, divisors[i].terms, q, K.exp_div(u, leads[i]))
    return MPoly(f.registry, rem)


def primitive_part(f, order):
    """Coprime integer coefficients with positive leading coefficient."""
    if not f.terms:
        return f
    num = 0
    den = 1
    for c in f.terms.values():
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    scale = Fraction(den, num)
    u, lc = leading_term(f, order)
    if lc < 0:
        scale = -scale
    return f * scale


def monic(f, order):
    if not f.terms:
        return f
    _, lc = leading_term(f, order)
    return f * (1 / lc)


def project_xy(f):
    """Image of a W/Z-free polynomial in the pure X/Y registry."""
    reg = f.registry
    split = reg.split
    if split == 0:
        return f
    small = VariableRegistry(reg.n, 0)
    out = {}
    for u, c in f.terms.items():
        if any(u[:split]):
            raise ValueError("polynomial involves W/Z variables")
        out[u[split:]] = c
    return MPoly(small, out)


def lift_xy(f, registry):
    """Embed a pure X/Y polynomial into a registry with basis variables."""
    if f.registry.n != registry.n:
        raise RegistryMismatch("point counts differ")
    pad = (0,) * registry.split
    return MPoly(registry, {pad + u: c for u, c in f.terms.items()})


def format_poly(f, order):
    """Canonical text: terms descending in the order, coefficients p/q,
    exponents with ^, factors joined by *."""
    if not f.terms:
        return "0"
    reg = f.registry
    disp = reg.display_positions()
    parts = []
    for u in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[u]
        mag = abs(c)
        factors = []
        for pos in disp:
            e = u[pos]
            if e == 0:
                continue
            nm = reg.name(pos)
            factors.append(nm if e == 1 else "%s^%d" % (nm, e))
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)
