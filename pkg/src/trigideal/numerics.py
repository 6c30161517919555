"""Certified arbitrary-precision interval arithmetic on complex boxes.

Endpoints are dyadic rationals m * 2**e held as plain ``(m, e)`` integer
pairs, so every operation is exact integer arithmetic plus explicit
directed rounding to a requested number of mantissa bits.  All rounding
is outward: a returned box always contains the exact mathematical
result.  The module supplies the three primitives the rest of the
package builds on: polynomial enclosure evaluation, root refinement
inside a user-supplied isolating box, and cos/sin enclosures.
"""

import math
from fractions import Fraction

from .errors import NonConvergence

DY_ZERO = (0, 0)
DY_ONE = (1, 0)


class Precision:
    """Working mantissa precision in bits.

    Plain integers are accepted everywhere a Precision is; this wrapper
    exists to make the doubling policy of refinement loops explicit.
    """

    __slots__ = ("bits",)

    def __init__(self, bits=128):
        bits = int(bits)
        if bits < 64:
            raise ValueError("precision below 64 bits")
        self.bits = bits

    def doubled(self):
        return Precision(2 * self.bits)

    def __int__(self):
        return self.bits

    def __repr__(self):
        return "Precision(%d)" % self.bits

    def __eq__(self, other):
        return isinstance(other, Precision) and self.bits == other.bits

    def __hash__(self):
        return hash(("Precision", self.bits))


def _bits(prec):
    """Normalize a Precision or plain int to an int bit count."""
    if isinstance(prec, Precision):
        return prec.bits
    bits = int(prec)
    if bits < 2:
        raise ValueError("unusable precision")
    return bits


# ---------------------------------------------------------------------------
# dyadic endpoints: value m * 2**e as a plain (m, e) pair


def dy_normalize(d):
    """Strip trailing zero bits so equal values compare equal as tuples."""
    m, e = d
    if m == 0:
        return DY_ZERO
    s = (m & -m).bit_length() - 1
    if s:
        return (m >> s, e + s)
    return d


def dy_from_int(n):
    return dy_normalize((n, 0))


def dy_to_fraction(d):
    m, e = d
    if e >= 0:
        return Fraction(m << e)
    return Fraction(m, 1 << -e)


def dy_round(d, prec, up):
    """Round to at most prec mantissa bits, toward +inf if up else -inf."""
    m, e = d
    if m == 0:
        return DY_ZERO
    excess = abs(m).bit_length() - int(prec)
    if excess <= 0:
        return dy_normalize(d)
    if up:
        m = -((-m) >> excess)
    else:
        m >>= excess
    return dy_normalize((m, e + excess))


def dy_from_fraction(x, prec, up):
    """Directed conversion of a Fraction; exact when the denominator is 2**t."""
    q = x.denominator
    if q & (q - 1) == 0:
        return dy_normalize((x.numerator, 1 - q.bit_length()))
    return dy_div((x.numerator, 0), (q, 0), prec, up)


def dy_neg(d):
    return (-d[0], d[1])


def dy_add(a, b):
    ma, ea = a
    mb, eb = b
    if ma == 0:
        return b
    if mb == 0:
        return a
    if ea >= eb:
        return ((ma << (ea - eb)) + mb, eb)
    return (ma + (mb << (eb - ea)), ea)


def dy_sub(a, b):
    return dy_add(a, (-b[0], b[1]))


def dy_mul(a, b):
    return (a[0] * b[0], a[1] + b[1])


def dy_cmp(a, b):
    ma, ea = a
    mb, eb = b
    sa = (ma > 0) - (ma < 0)
    sb = (mb > 0) - (mb < 0)
    if sa != sb:
        return 1 if sa > sb else -1
    if ea > eb:
        ma <<= ea - eb
    elif eb > ea:
        mb <<= eb - ea
    return (ma > mb) - (ma < mb)


def dy_min(a, b):
    return a if dy_cmp(a, b) <= 0 else b


def dy_max(a, b):
    return a if dy_cmp(a, b) >= 0 else b


def dy_div(a, b, prec, up):
    """Directed division to prec bits."""
    ma, ea = a
    mb, eb = b
    if mb == 0:
        raise ZeroDivisionError("dyadic division by zero")
    if ma == 0:
        return DY_ZERO
    shift = int(prec) + 2 + abs(mb).bit_length() - abs(ma).bit_length()
    if shift < 0:
        shift = 0
    num = ma << shift
    if up:
        q = -((-num) // mb)
    else:
        q = num // mb
    return dy_round((q, ea - shift - eb), prec, up)


def dy_half(d):
    return (d[0], d[1] - 1)


# ---------------------------------------------------------------------------
# real intervals: (lo, hi) pairs of dyadics, lo <= hi


def iv_round_out(iv, prec):
    return (dy_round(iv[0], prec, False), dy_round(iv[1], prec, True))


def iv_add(a, b, prec):
    return (
        dy_round(dy_add(a[0], b[0]), prec, False),
        dy_round(dy_add(a[1], b[1]), prec, True),
    )


def iv_sub(a, b, prec):
    return (
        dy_round(dy_sub(a[0], b[1]), prec, False),
        dy_round(dy_sub(a[1], b[0]), prec, True),
    )


def iv_neg(a):
    return (dy_neg(a[1]), dy_neg(a[0]))


def iv_mul(a, b, prec):
    lo1, hi1 = a
    lo2, hi2 = b
    p0 = dy_mul(lo1, lo2)
    lo = hi = p0
    for p in (dy_mul(lo1, hi2), dy_mul(hi1, lo2), dy_mul(hi1, hi2)):
        if dy_cmp(p, lo) < 0:
            lo = p
        if dy_cmp(p, hi) > 0:
            hi = p
    return (dy_round(lo, prec, False), dy_round(hi, prec, True))


def iv_sqr(a, prec):
    """Tight range of x**2 over the interval (tighter than iv_mul(a, a))."""
    lo, hi = a
    if lo[0] >= 0:
        out = (dy_mul(lo, lo), dy_mul(hi, hi))
    elif hi[0] <= 0:
        out = (dy_mul(hi, hi), dy_mul(lo, lo))
    else:
        out = (DY_ZERO, dy_max(dy_mul(lo, lo), dy_mul(hi, hi)))
    return iv_round_out(out, prec)


def iv_contains_zero(a):
    return a[0][0] <= 0 <= a[1][0]


def iv_div(a, b, prec):
    """a / b for 0 strictly outside b; min/max of directed endpoint quotients."""
    if iv_contains_zero(b):
        raise ZeroDivisionError("interval divisor straddles zero")
    lo = hi = None
    for x in a:
        for y in b:
            d = dy_div(x, y, prec, False)
            u = dy_div(x, y, prec, True)
            lo = d if lo is None else dy_min(lo, d)
            hi = u if hi is None else dy_max(hi, u)
    return (lo, hi)


def iv_div_int(a, n, prec):
    """Divide by an exact nonzero integer."""
    dn = (n, 0)
    if n > 0:
        return (dy_div(a[0], dn, prec, False), dy_div(a[1], dn, prec, True))
    return (dy_div(a[1], dn, prec, False), dy_div(a[0], dn, prec, True))


def iv_scale_int(a, n):
    """Multiply by an exact integer (no rounding)."""
    if n >= 0:
        return (dy_mul(a[0], (n, 0)), dy_mul(a[1], (n, 0)))
    return (dy_mul(a[1], (n, 0)), dy_mul(a[0], (n, 0)))


# ---------------------------------------------------------------------------
# complex boxes


class ComplexBox:
    """Axis-aligned rectangle in the complex plane with dyadic endpoints."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=(DY_ZERO, DY_ZERO)):
        if dy_cmp(re[0], re[1]) > 0 or dy_cmp(im[0], im[1]) > 0:
            raise ValueError("box endpoints out of order")
        self.re = (dy_normalize(re[0]), dy_normalize(re[1]))
        self.im = (dy_normalize(im[0]), dy_normalize(im[1]))

    # -- constructors

    @classmethod
    def point_int(cls, n):
        d = dy_from_int(n)
        return cls((d, d))

    @classmethod
    def from_fractions(cls, re_lo, re_hi, im_lo=0, im_hi=0, prec=128):
        """Outward conversion; exact whenever denominators are powers of two."""
        bits = _bits(prec)
        return cls(
            (
                dy_from_fraction(Fraction(re_lo), bits, False),
                dy_from_fraction(Fraction(re_hi), bits, True),
            ),
            (
                dy_from_fraction(Fraction(im_lo), bits, False),
                dy_from_fraction(Fraction(im_hi), bits, True),
            ),
        )

    # -- field access (exact values)

    @property
    def re_lo(self):
        return dy_to_fraction(self.re[0])

    @property
    def re_hi(self):
        return dy_to_fraction(self.re[1])

    @property
    def im_lo(self):
        return dy_to_fraction(self.im[0])

    @property
    def im_hi(self):
        return dy_to_fraction(self.im[1])

    # -- geometry

    def width(self):
        """max over both axes of (hi - lo), as an exact Fraction."""
        wr = dy_to_fraction(dy_sub(self.re[1], self.re[0]))
        wi = dy_to_fraction(dy_sub(self.im[1], self.im[0]))
        return wr if wr >= wi else wi

    def mid(self):
        """Exact dyadic midpoint (re, im)."""
        return (
            dy_normalize(dy_half(dy_add(self.re[0], self.re[1]))),
            dy_normalize(dy_half(dy_add(self.im[0], self.im[1]))),
        )

    def mid_box(self):
        mr, mi = self.mid()
        return ComplexBox((mr, mr), (mi, mi))

    def contains_zero(self):
        return iv_contains_zero(self.re) and iv_contains_zero(self.im)

    def contains_point(self, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        return (
            self.re_lo <= re <= self.re_hi and self.im_lo <= im <= self.im_hi
        )

    def intersect(self, other):
        """Intersection box, or None when disjoint."""
        rlo = dy_max(self.re[0], other.re[0])
        rhi = dy_min(self.re[1], other.re[1])
        ilo = dy_max(self.im[0], other.im[0])
        ihi = dy_min(self.im[1], other.im[1])
        if dy_cmp(rlo, rhi) > 0 or dy_cmp(ilo, ihi) > 0:
            return None
        return ComplexBox((rlo, rhi), (ilo, ihi))

    def inside(self, other):
        return (
            dy_cmp(other.re[0], self.re[0]) <= 0
            and dy_cmp(self.re[1], other.re[1]) <= 0
            and dy_cmp(other.im[0], self.im[0]) <= 0
            and dy_cmp(self.im[1], other.im[1]) <= 0
        )

    def hull(self, other):
        return ComplexBox(
            (dy_min(self.re[0], other.re[0]), dy_max(self.re[1], other.re[1])),
            (dy_min(self.im[0], other.im[0]), dy_max(self.im[1], other.im[1])),
        )

    def abs_sq_hi(self):
        """Exact Fraction upper bound on |z|**2 over the box."""
        r = max(abs(self.re_lo), abs(self.re_hi))
        i = max(abs(self.im_lo), abs(self.im_hi))
        return r * r + i * i

    def abs_sq_lo(self):
        """Exact Fraction lower bound on |z|**2 over the box."""
        if iv_contains_zero(self.re):
            r = Fraction(0)
        else:
            r = min(abs(self.re_lo), abs(self.re_hi))
        if iv_contains_zero(self.im):
            i = Fraction(0)
        else:
            i = min(abs(self.im_lo), abs(self.im_hi))
        return r * r + i * i

    def __eq__(self, other):
        if not isinstance(other, ComplexBox):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        def fmt(d):
            return "%.6g" % float(dy_to_fraction(d))

        return "ComplexBox([%s, %s] + [%s, %s]i)" % (
            fmt(self.re[0]),
            fmt(self.re[1]),
            fmt(self.im[0]),
            fmt(self.im[1]),
        )


CB_ZERO = ComplexBox((DY_ZERO, DY_ZERO))
CB_ONE = ComplexBox((DY_ONE, DY_ONE))


def cb_add(a, b, prec):
    return ComplexBox(iv_add(a.re, b.re, prec), iv_add(a.im, b.im, prec))


def cb_sub(a, b, prec):
    return ComplexBox(iv_sub(a.re, b.re, prec), iv_sub(a.im, b.im, prec))


def cb_neg(a):
    return ComplexBox(iv_neg(a.re), iv_neg(a.im))


def cb_mul(a, b, prec):
    return ComplexBox(
        iv_sub(iv_mul(a.re, b.re, prec), iv_mul(a.im, b.im, prec), prec),
        iv_add(iv_mul(a.re, b.im, prec), iv_mul(a.im, b.re, prec), prec),
    )


def cb_sqr(a, prec):
    """Range of z**2; uses the tight interval square on each axis."""
    return ComplexBox(
        iv_sub(iv_sqr(a.re, prec), iv_sqr(a.im, prec), prec),
        iv_scale_int(iv_mul(a.re, a.im, prec), 2),
    )


def cb_div(a, b, prec):
    """a / b for boxes b excluding 0, via multiplication by the reciprocal."""
    den = iv_add(iv_sqr(b.re, prec), iv_sqr(b.im, prec), prec)
    recip = ComplexBox(iv_div(b.re, den, prec), iv_neg(iv_div(b.im, den, prec)))
    return cb_mul(a, recip, prec)


def cb_div_int(a, n, prec):
    return ComplexBox(iv_div_int(a.re, n, prec), iv_div_int(a.im, n, prec))


def cb_scale_int(a, n):
    return ComplexBox(iv_scale_int(a.re, n), iv_scale_int(a.im, n))


def cb_pad(a, d):
    """Inflate both axes outward by the nonnegative dyadic d."""
    return ComplexBox(
        (dy_sub(a.re[0], d), dy_add(a.re[1], d)),
        (dy_sub(a.im[0], d), dy_add(a.im[1], d)),
    )


def coeff_box(c, prec):
    """Point-or-sliver box for an exact int or Fraction coefficient."""
    if isinstance(c, int):
        d = dy_from_int(c)
        return ComplexBox((d, d))
    c = Fraction(c)
    bits = _bits(prec)
    return ComplexBox(
        (dy_from_fraction(c, bits, False), dy_from_fraction(c, bits, True))
    )


# ---------------------------------------------------------------------------
# polynomial enclosure and root refinement


def box_eval_poly(p, b, prec):
    """Enclose p(z) over the box b; p is a low-to-high coefficient list.

    Coefficients may be ints (exact) or Fractions (rounded outward).
    Plain Horner evaluation; every intermediate rounds outward at prec.
    """
    bits = _bits(prec)
    if not p:
        return CB_ZERO
    acc = coeff_box(p[-1], bits)
    for c in reversed(p[:-1]):
        acc = cb_add(cb_mul(acc, b, bits), coeff_box(c, bits), bits)
    return acc


def _derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _as_fraction(x):
    if isinstance(x, tuple):
        return dy_to_fraction(x)
    return Fraction(x)


def _subdivide_refine(p, box, bits):
    """One 4x4 grid pass: drop cells whose enclosure excludes 0, hull the rest.

    Returns the hull (None when every cell is excluded, i.e. no root).
    """

    def cuts(iv):
        lo, hi = iv
        if dy_cmp(lo, hi) == 0:
            return [lo, hi]
        w4 = (dy_sub(hi, lo)[0], dy_sub(hi, lo)[1] - 2)
        pts = [lo]
        for k in (1, 2, 3):
            pts.append(dy_add(lo, (w4[0] * k, w4[1])))
        pts.append(hi)
        return pts

    re_pts = cuts(box.re)
    im_pts = cuts(box.im)
    hull = None
    for a in range(len(re_pts) - 1):
        for b_ in range(len(im_pts) - 1):
            cell = ComplexBox(
                (re_pts[a], re_pts[a + 1]), (im_pts[b_], im_pts[b_ + 1])
            )
            if box_eval_poly(p, cell, bits).contains_zero():
                hull = cell if hull is None else hull.hull(cell)
    return hull


def refine_root(p, b, target_width, start_bits=128, max_bits=1 << 20):
    """Shrink an isolating box around a root of p to width <= target_width.

    The caller asserts b isolates exactly one root of p.  Interval Newton
    steps do the contraction; when the derivative enclosure straddles 0
    a grid subdivision discards root-free cells instead.  Containment of
    the Newton image in the current box together with a derivative
    enclosure excluding 0 certifies the root unique (mean value form on
    a convex box); until that certificate is seen the result is not
    returned.  Raises NonConvergence when the box can be shown to hold
    no root, or when the precision ceiling is hit without certification.
    """
    target = _as_fraction(target_width)
    if target < 0:
        raise ValueError("negative target width")
    dp = _derivative(p)
    bits = start_bits
    cur = b
    certified = False
    while True:
        if certified and cur.width() <= target:
            return cur
        if bits > max_bits:
            raise NonConvergence(
                "could not certify a unique root at %d bits" % (bits // 2)
            )
        dB = box_eval_poly(dp, cur, bits)
        if not dB.contains_zero():
            mid = cur.mid_box()
            fm = box_eval_poly(p, mid, bits)
            newton = cb_sub(mid, cb_div(fm, dB, bits), bits)
            cap = newton.intersect(cur)
            if cap is None:
                raise NonConvergence("Newton image misses the box: no root inside")
            if newton.inside(cur):
                certified = True
            if cap.width() <= cur.width() * Fraction(3, 4):
                cur = cap
                continue
            cur = cap
            bits *= 2
            continue
        hull = _subdivide_refine(p, cur, bits)
        if hull is None:
            raise NonConvergence("enclosure excludes 0 on every cell: no root inside")
        if hull.width() <= cur.width() * Fraction(7, 8):
            cur = hull
            continue
        bits *= 2


# ---------------------------------------------------------------------------
# cos/sin enclosures


def _tail_count(m2, bits):
    """Number K of series terms so both trig tails are below 2**-(bits+2).

    m2 is an exact Fraction bound on |z|**2.  The shared tail bound is
    2 * max(1, m2) * m2**K / (2K)!, valid once m2 < (2K+1)(2K+2) / 2.
    """
    target = Fraction(1, 1 << (bits + 2))
    scale = 2 * max(Fraction(1), m2)
    t = Fraction(1)
    k = 0
    while True:
        k += 1
        t = t * m2 / ((2 * k - 1) * (2 * k))
        if 2 * m2 < (2 * k + 1) * (2 * k + 2) and scale * t <= target:
            return k


def trig_enclosure(b, prec):
    """Boxes containing cos(z) and sin(z) for every z in b.

    Taylor series at 0 with an explicit factorial tail bound; no
    argument reduction, so cost grows with |z| (fine at small scale).
    Valid for complex boxes: on the imaginary axis this encloses
    cosh/sinh values.
    """
    bits = _bits(prec)
    work = bits + 32
    m2 = b.abs_sq_hi()
    K = _tail_count(m2, bits)
    z2 = cb_sqr(b, work)
    cos_acc = CB_ONE
    sin_acc = CB_ONE
    term_c = CB_ONE
    term_s = CB_ONE
    for k in range(1, K):
        term_c = cb_div_int(cb_mul(term_c, z2, work), -((2 * k - 1) * (2 * k)), work)
        cos_acc = cb_add(cos_acc, term_c, work)
        term_s = cb_div_int(cb_mul(term_s, z2, work), -((2 * k) * (2 * k + 1)), work)
        sin_acc = cb_add(sin_acc, term_s, work)
    sin_box = cb_mul(b, sin_acc, work)
    tail = 2 * max(Fraction(1), m2) * (m2 ** K) / math.factorial(2 * K)
    pad = dy_from_fraction(tail, 32, True)
    return (cb_pad(cos_acc, pad), cb_pad(sin_box, pad))
