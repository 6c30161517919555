"""Pipeline from algebraic angle points to their exact relation ideal.

Steps: find an integer angle basis (angle_basis), expand each point's
cosine and sine as integer polynomials in the basis-angle variables
(expand_point), assemble the ideal generated by X_i - P_i, Y_i - Q_i,
and W_j^2 + Z_j^2 - 1, compute its reduced Groebner basis under the
block elimination order, and keep the W/Z-free generators.  Every
emitted generator is certified numerically: its interval evaluation at
enclosures of (cos a_i, sin a_i) must contain zero.
"""

from fractions import Fraction

from .algebraic import angle_basis
from .errors import CertificationFailure
from .groebner import GroebnerBasis, buchberger, eliminate, member
from .numerics import CB_ZERO, Precision, cb_add, cb_div_int, cb_mul, cb_sqr, coeff_box, trig_enclosure
from .polyring import MonomialOrder, MPoly, VariableRegistry, project_xy


class ExpansionPair:
    """cos and sin of one input point as integer polynomials in W/Z."""

    __slots__ = ("p", "q", "point_index")

    def __init__(self, p, q, point_index):
        self.p = p
        self.q = q
        self.point_index = point_index

    def __eq__(self, other):
        if not isinstance(other, ExpansionPair):
            return NotImplemented
        return (self.p, self.q, self.point_index) == (other.p, other.q, other.point_index)

    def __repr__(self):
        return "ExpansionPair(point %d)" % (self.point_index + 1)


class CertificationRecord:
    """Interval-evaluation evidence that every generator vanishes."""

    __slots__ = ("bits", "boxes", "max_width", "max_abs")

    def __init__(self, bits, boxes, max_width, max_abs):
        self.bits = bits
        self.boxes = boxes
        self.max_width = max_width
        self.max_abs = max_abs

    def __repr__(self):
        return "CertificationRecord(bits=%d, generators=%d, max_width=%s)" % (
            self.bits,
            len(self.boxes),
            repr(float(self.max_width)),
        )


class RelationIdeal:
    """All algebraic relations among (cos a_i, sin a_i) for the points."""

    __slots__ = ("points", "basis", "expansions", "generators", "certificate", "block_gb", "xy_gb")

    def __init__(self, points, basis, expansions, generators, certificate, block_gb, xy_gb):
        self.points = tuple(points)
        self.basis = basis
        self.expansions = tuple(expansions)
        self.generators = tuple(generators)
        self.certificate = certificate
        self.block_gb = block_gb
        self.xy_gb = xy_gb

    @property
    def registry(self):
        return self.xy_gb.registry

    def __repr__(self):
        return "RelationIdeal(%d points, %d generators)" % (
            len(self.points),
            len(self.generators),
        )


def _z_reduced(f):
    """Rewrite every Z_j^2 into 1 - W_j^2 until all Z-exponents are 0 or 1."""
    reg = f.registry
    zw = [(reg.position("Z", j + 1), reg.position("W", j + 1)) for j in range(reg.k)]
    out = {}
    stack = list(f.terms.items())
    while stack:
        u, c = stack.pop()
        for zpos, wpos in zw:
            if u[zpos] >= 2:
                base = list(u)
                base[zpos] -= 2
                stack.append((tuple(base), c))
                base[wpos] += 2
                stack.append((tuple(base), -c))
                break
        else:
            acc = out.get(u, Fraction(0)) + c
            if acc:
                out[u] = acc
            elif u in out:
                del out[u]
    return MPoly(reg, out)


def _compose(a, b):
    """Angle addition on (cos, sin) polynomial pairs, Z-reduced."""
    pa, qa = a
    pb, qb = b
    return _z_reduced(pa * pb - qa * qb), _z_reduced(qa * pb + pa * qb)


def expand_multiple(m):
    """cos(m t), sin(m t) as Z-reduced integer polynomials in W=cos t, Z=sin t."""
    reg = VariableRegistry(0, 1)
    m = int(m)
    neg = m < 0
    m = abs(m)
    cur = (reg.constant(1), reg.constant(0))
    base = (reg.var("W", 1), reg.var("Z", 1))
    while m:
        if m & 1:
            cur = _compose(cur, base)
        m >>= 1
        if m:
            base = _compose(base, base)
    p, q = cur
    if neg:
        q = -q
    return p, q


def _relabel(f, reg, j):
    """Move a single-basis-pair polynomial onto basis slot j of reg."""
    width = reg.num_vars
    offset = 2 * (j - 1)
    out = {}
    for u, c in f.terms.items():
        e = [0] * width
        e[offset] = u[0]
        e[offset + 1] = u[1]
        out[tuple(e)] = c
    return MPoly(reg, out)


def expand_point(basis, i, points=None, bits=256):
    """ExpansionPair for point i; multiples combine by angle addition.

    When the point values are supplied, the implied identities
    cos(a_i) = P_i(cos b_1/d, sin b_1/d, ...) and likewise for sin are
    checked against interval enclosures at construction.
    """
    n = len(basis.coords)
    k = basis.size
    reg = VariableRegistry(n, k)
    cur = (reg.constant(1), reg.constant(0))
    for j, mult in enumerate(basis.coords[i]):
        pj, qj = expand_multiple(mult)
        cur = _compose(cur, (_relabel(pj, reg, j + 1), _relabel(qj, reg, j + 1)))
    pair = ExpansionPair(cur[0], cur[1], i)
    if points is not None:
        _certify_expansion(pair, basis, points, bits)
    return pair


def eval_poly_boxes(f, assign, prec):
    """Interval evaluation of f; assign maps variable slot -> ComplexBox."""
    total = CB_ZERO
    for u, c in f.terms.items():
        term = coeff_box(c, prec)
        for pos, e in enumerate(u):
            if e:
                term = cb_mul(term, _cb_pow(assign[pos], e, prec), prec)
        total = cb_add(total, term, prec)
    return total


def _cb_pow(b, e, prec):
    result = None
    while e:
        if e & 1:
            result = b if result is None else cb_mul(result, b, prec)
        e >>= 1
        if e:
            b = cb_sqr(b, prec)
    return result


def _basis_angle_boxes(basis, points, bits):
    """Trig enclosures for each basis angle divided by the denominator."""
    prec = Precision(bits)
    target = Fraction(1, 1 << bits)
    assign = {}
    for j, idx in enumerate(basis.basis_indices):
        box = cb_div_int(points[idx].refined(target), basis.denominator, prec)
        cosb, sinb = trig_enclosure(box, prec)
        assign[2 * j] = cosb
        assign[2 * j + 1] = sinb
    return assign, prec, target


def _certify_expansion(pair, basis, points, bits):
    assign, prec, target = _basis_angle_boxes(basis, points, bits)
    cosb, sinb = trig_enclosure(points[pair.point_index].refined(target), prec)
    pbox = eval_poly_boxes(pair.p, assign, prec)
    qbox = eval_poly_boxes(pair.q, assign, prec)
    if pbox.intersect(cosb) is None or qbox.intersect(sinb) is None:
        raise CertificationFailure(
            "expansion of point %d disagrees with its enclosure" % (pair.point_index + 1)
        )


def _trig_assignment(points, registry, bits):
    """Slot -> enclosure of (cos a_i, sin a_i) in the X/Y registry."""
    prec = Precision(bits)
    target = Fraction(1, 1 << bits)
    assign = {}
    for i, a in enumerate(points, start=1):
        cosb, sinb = trig_enclosure(a.refined(target), prec)
        assign[registry.position("X", i)] = cosb
        assign[registry.position("Y", i)] = sinb
    return assign, prec


def _certification(points, generators, registry, bits):
    assign, prec = _trig_assignment(points, registry, bits)
    threshold = Fraction(1, 1 << (bits // 2))
    boxes = []
    max_width = Fraction(0)
    max_abs = Fraction(0)
    for g in generators:
        b = eval_poly_boxes(g, assign, prec)
        if not b.contains_zero():
            raise CertificationFailure("generator interval evaluation excludes zero")
        w = b.width()
        if w >= threshold:
            raise CertificationFailure("certification box too wide at %d bits" % bits)
        bound = max(abs(b.re_lo), abs(b.re_hi)) + max(abs(b.im_lo), abs(b.im_hi))
        max_width = max(max_width, w)
        max_abs = max(max_abs, bound)
        boxes.append(b)
    return CertificationRecord(bits, tuple(boxes), max_width, max_abs)


def relation_ideal(points, height_bound=65536, bits=256, max_pairs=10**6):
    """Full pipeline: basis, expansions, elimination, certification."""
    points = list(points)
    if not points:
        raise ValueError("relation_ideal needs at least one point")
    basis = angle_basis(points, height_bound=height_bound)
    n = len(points)
    k = basis.size
    expansions = [expand_point(basis, i, points=points, bits=bits) for i in range(n)]
    reg = VariableRegistry(n, k)
    order = MonomialOrder("block_elim", reg)
    gens = []
    for i, pair in enumerate(expansions, start=1):
        gens.append(reg.var("X", i) - pair.p)
        gens.append(reg.var("Y", i) - pair.q)
    for j in range(1, k + 1):
        gens.append(reg.var("W", j) ** 2 + reg.var("Z", j) ** 2 - 1)
    block_gb = buchberger(gens, order, max_pairs=max_pairs)
    xy_gens = [project_xy(g) for g in eliminate(block_gb)]
    reg_xy = VariableRegistry(n, 0)
    xy_gb = GroebnerBasis(xy_gens, MonomialOrder("lex", reg_xy))
    certificate = _certification(points, xy_gens, reg_xy, bits)
    return RelationIdeal(points, basis, expansions, xy_gens, certificate, block_gb, xy_gb)


def verify_relation(ideal, f):
    """(holds, normal form): f vanishes at the points iff it is a member."""
    ok, nf = member(f, ideal.xy_gb)
    return ok, nf


def canonical_form(ideal, f):
    """Unique normal form of f modulo the relation ideal."""
    return member(f, ideal.xy_gb)[1]


def certify_numeric(ideal, bits):
    """Re-run interval certification of every generator at the given bits."""
    bits = int(bits)
    return _certification(ideal.points, ideal.generators, ideal.registry, bits)


def exclusion_box(ideal, f, bits=256):
    """Interval evaluation of f at the points when it excludes zero, else None.

    Used to attach numeric evidence to a failed verification: the normal
    form of a non-member evaluates to the same nonzero number as f.
    """
    assign, prec = _trig_assignment(ideal.points, ideal.registry, bits)
    box = eval_poly_boxes(f, assign, prec)
    return None if box.contains_zero() else box
