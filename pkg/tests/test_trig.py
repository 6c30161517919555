"""Tests for the pipeline: multiple-angle expansion, relation ideals,
verification, canonical forms, and numeric certification."""

import math
import random
from fractions import Fraction

import pytest

from trigideal.algebraic import AlgebraicNumber, alg_combination, angle_basis
from trigideal.errors import ResourceLimit
from trigideal.groebner import member, s_polynomial
from trigideal.numerics import ComplexBox, Precision, trig_enclosure
from trigideal.polyring import (
    MonomialOrder,
    MPoly,
    VariableRegistry,
    lift_xy,
    normal_form,
)
from trigideal.trig import (
    canonical_form,
    certify_numeric,
    eval_poly_boxes,
    exclusion_box,
    expand_multiple,
    expand_point,
    relation_ideal,
    verify_relation,
)


def rat(x):
    return AlgebraicNumber.from_rational(Fraction(x))


def sqrt_num(n):
    r = math.isqrt(n)
    box = ComplexBox.from_fractions(
        Fraction(r), Fraction(r + 1), Fraction(-1, 100), Fraction(1, 100)
    )
    return AlgebraicNumber([-n, 0, 1], box)


def chebyshev_pair(m):
    """Oracle: coefficient lists of T_|m| and U_{|m|-1} by the recurrence."""
    a = abs(m)
    if a == 0:
        return [1], [0]
    t_prev, t_cur = [1], [0, 1]
    u_prev, u_cur = [0], [1]
    for _ in range(a - 1):
        t_next = [0] + [2 * c for c in t_cur]
        for i, c in enumerate(t_prev):
            t_next[i] -= c
        u_next = [0] + [2 * c for c in u_cur]
        for i, c in enumerate(u_prev):
            u_next[i] -= c
        t_prev, t_cur = t_cur, t_next
        u_prev, u_cur = u_cur, u_next
    return t_cur, u_cur


def w_poly(reg, coeffs, with_z=False):
    w = reg.var("W", 1)
    z = reg.var("Z", 1)
    total = reg.constant(0)
    for i, c in enumerate(coeffs):
        if c:
            total = total + c * w**i
    return total * z if with_z else total


# expand_multiple


def test_expand_zero_multiple():
    p, q = expand_multiple(0)
    assert p == p.registry.constant(1)
    assert q.is_zero()


def test_expand_double_angle_golden():
    p, q = expand_multiple(2)
    reg = p.registry
    w, z = reg.var("W", 1), reg.var("Z", 1)
    assert p == 2 * w**2 - 1
    assert q == 2 * z * w


def test_expand_triple_angle_golden():
    p, q = expand_multiple(3)
    reg = p.registry
    w, z = reg.var("W", 1), reg.var("Z", 1)
    assert p == 4 * w**3 - 3 * w
    assert q == z * (4 * w**2 - 1)


def test_expand_reflection():
    p, q = expand_multiple(-1)
    reg = p.registry
    assert p == reg.var("W", 1)
    assert q == -reg.var("Z", 1)
    for m in range(1, 7):
        pp, qp = expand_multiple(m)
        pn, qn = expand_multiple(-m)
        assert pn == pp and qn == -qp


def test_expand_matches_chebyshev_oracle():
    for m in range(-6, 7):
        p, q = expand_multiple(m)
        t, u = chebyshev_pair(m)
        reg = p.registry
        assert p == w_poly(reg, t)
        expected_q = w_poly(reg, u, with_z=True)
        assert q == (-expected_q if m < 0 else expected_q)


def test_expansion_z_degree_and_integrality():
    for m in range(-8, 9):
        for f in expand_multiple(m):
            reg = f.registry
            zpos = reg.position("Z", 1)
            for u, c in f.terms.items():
                assert u[zpos] <= 1
                assert c.denominator == 1


def test_expansion_pythagorean_congruence():
    reg = VariableRegistry(0, 1)
    order = MonomialOrder("block_elim", reg)
    circle = reg.var("W", 1) ** 2 + reg.var("Z", 1) ** 2 - 1
    for m in range(-6, 7):
        p, q = expand_multiple(m)
        nf = normal_form(p * p + q * q, [circle], order)
        assert nf == reg.constant(1)


def test_expansion_numeric_containment():
    # enclosures of p,q at (cos t, sin t) must meet enclosures of cos/sin(mt)
    rng = random.Random(60601)
    prec = Precision(128)
    for _ in range(20):
        t = Fraction(rng.randint(-8, 8), rng.randint(1, 4))
        tbox = ComplexBox.from_fractions(t, t)
        cosb, sinb = trig_enclosure(tbox, prec)
        assign = {0: cosb, 1: sinb}
        for m in range(-5, 6):
            p, q = expand_multiple(m)
            mbox = ComplexBox.from_fractions(m * t, m * t)
            cosm, sinm = trig_enclosure(mbox, prec)
            assert eval_poly_boxes(p, assign, prec).intersect(cosm) is not None
            assert eval_poly_boxes(q, assign, prec).intersect(sinm) is not None


# expand_point


def test_expand_point_identity_expansion():
    s2 = sqrt_num(2)
    basis = angle_basis([s2])
    pair = expand_point(basis, 0, points=[s2])
    reg = pair.p.registry
    assert reg.n == 1 and reg.k == 1
    assert pair.p == reg.var("W", 1)
    assert pair.q == reg.var("Z", 1)
    assert pair.point_index == 0


def test_expand_point_double_relabeled():
    pts = [rat(1), rat(2)]
    basis = angle_basis(pts)
    pair = expand_point(basis, 1, points=pts)
    reg = pair.p.registry
    w, z = reg.var("W", 1), reg.var("Z", 1)
    assert pair.p == 2 * w**2 - 1
    assert pair.q == 2 * z * w


def test_expand_point_sum_of_two_basis_angles():
    s2, s3 = sqrt_num(2), sqrt_num(3)
    s23 = alg_combination([1, 1], [s2, s3])
    pts = [s2, s3, s23]
    basis = angle_basis(pts)
    assert basis.coords[2] == (1, 1)
    pair = expand_point(basis, 2, points=pts)
    reg = pair.p.registry
    w1, z1 = reg.var("W", 1), reg.var("Z", 1)
    w2, z2 = reg.var("W", 2), reg.var("Z", 2)
    assert pair.p == w1 * w2 - z1 * z2
    assert pair.q == z1 * w2 + w1 * z2
    # soundness modulo both circle relations
    order = MonomialOrder("block_elim", reg)
    circles = [w1**2 + z1**2 - 1, w2**2 + z2**2 - 1]
    nf = normal_form(pair.p**2 + pair.q**2, circles, order)
    assert nf == reg.constant(1)


# relation_ideal goldens


def test_relation_ideal_single_point():
    ideal = relation_ideal([rat(1)])
    reg = ideal.registry
    assert ideal.generators == (reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1,)
    assert ideal.certificate.bits == 256
    assert len(ideal.certificate.boxes) == 1


def test_relation_ideal_independent_pair():
    ideal = relation_ideal([rat(1), sqrt_num(2)])
    reg = ideal.registry
    expected = {
        reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1,
        reg.var("X", 2) ** 2 + reg.var("Y", 2) ** 2 - 1,
    }
    assert set(ideal.generators) == expected


def test_relation_ideal_double_angle_golden():
    ideal = relation_ideal([rat(1), rat(2)])
    reg = ideal.registry
    x1, y1 = reg.var("X", 1), reg.var("Y", 1)
    x2, y2 = reg.var("X", 2), reg.var("Y", 2)
    assert ideal.generators == (
        x2 + 2 * y1**2 - 1,
        y2 - 2 * x1 * y1,
        x1**2 + y1**2 - 1,
    )


def test_relation_ideal_reflection_golden():
    ideal = relation_ideal([rat(1), rat(-1)])
    reg = ideal.registry
    x1, y1 = reg.var("X", 1), reg.var("Y", 1)
    x2, y2 = reg.var("X", 2), reg.var("Y", 2)
    assert ideal.generators == (x2 - x1, y2 + y1, x1**2 + y1**2 - 1)


def test_relation_ideal_zero_point_golden():
    ideal = relation_ideal([rat(0)])
    reg = ideal.registry
    assert ideal.generators == (reg.var("X", 1) - 1, reg.var("Y", 1))


def test_relation_ideal_rejects_empty():
    with pytest.raises(ValueError):
        relation_ideal([])


def test_relation_ideal_resource_limit_propagates():
    with pytest.raises(ResourceLimit):
        relation_ideal([rat(1), rat(2)], max_pairs=1)


# structural properties


def test_full_rank_basis_leaves_only_circles():
    # whenever the basis has size n, the only relations are the circles
    for pts in ([rat(1)], [rat(1), sqrt_num(2)], [sqrt_num(2), sqrt_num(3)]):
        ideal = relation_ideal(pts)
        if ideal.basis.size == len(pts):
            reg = ideal.registry
            expected = {
                reg.var("X", i) ** 2 + reg.var("Y", i) ** 2 - 1
                for i in range(1, len(pts) + 1)
            }
            assert set(ideal.generators) == expected


def test_generators_lift_into_assembly_ideal():
    for pts in ([rat(1), rat(2)], [rat(2), rat(1), rat(Fraction(1, 2))]):
        ideal = relation_ideal(pts)
        big = ideal.block_gb.registry
        for g in ideal.generators:
            ok, _ = member(lift_xy(g, big), ideal.block_gb)
            assert ok


def test_scale_invariance_of_independent_single_point():
    a = relation_ideal([sqrt_num(2)])
    b = relation_ideal([sqrt_num(3)])
    assert a.generators == b.generators


def test_xy_basis_is_self_consistent():
    # eliminated generators form a Groebner basis in the X/Y ring
    for pts in ([rat(1), rat(2)], [rat(2), rat(1), rat(Fraction(1, 2))]):
        ideal = relation_ideal(pts)
        gb = ideal.xy_gb
        gens = list(gb.generators)
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                s = s_polynomial(gens[i], gens[j], gb.order)
                assert normal_form(s, gens, gb.order).is_zero()


# verification and canonical forms


def test_verify_pythagorean_identity():
    ideal = relation_ideal([rat(1)])
    reg = ideal.registry
    f = reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1
    holds, nf = verify_relation(ideal, f)
    assert holds and nf.is_zero()


def test_verify_recursive_identity_instance():
    # cos a cos^2 2a + 4 sin a sin(a/2) cos(a/2) cos 2a - sin^2 2a cos a = 1
    # at a = 1, with points declared in the order (2, 1, 1/2)
    ideal = relation_ideal([rat(2), rat(1), rat(Fraction(1, 2))])
    reg = ideal.registry
    x = [None] + [reg.var("X", i) for i in range(1, 4)]
    y = [None] + [reg.var("Y", i) for i in range(1, 4)]
    f = x[1] * x[2] ** 2 + 4 * y[1] * y[3] * x[3] * x[2] - y[2] ** 2 * x[1] - 1
    holds, nf = verify_relation(ideal, f)
    assert holds and nf.is_zero()
    # every single +1 coefficient perturbation breaks it
    for u in list(f.terms):
        g = f + MPoly(reg, {u: Fraction(1)})
        holds, nf = verify_relation(ideal, g)
        assert not holds
        box = exclusion_box(ideal, nf)
        assert box is not None and not box.contains_zero()


def test_verify_failure_with_exclusion_box():
    ideal = relation_ideal([rat(1)])
    reg = ideal.registry
    f = reg.var("X", 1) + reg.var("Y", 1)
    holds, nf = verify_relation(ideal, f)
    assert not holds
    assert nf == f
    box = exclusion_box(ideal, f)
    # cos 1 + sin 1 = 1.3817...
    assert box is not None
    assert box.re_lo > Fraction(13, 10) and box.re_hi < Fraction(14, 10)
    assert exclusion_box(ideal, reg.constant(0)) is None


def test_canonical_form_goldens():
    ideal = relation_ideal([rat(1)])
    reg = ideal.registry
    x, y = reg.var("X", 1), reg.var("Y", 1)
    assert canonical_form(ideal, reg.constant(0)).is_zero()
    assert canonical_form(ideal, x**2) == 1 - y**2
    reduced = canonical_form(ideal, x**3 * y + x)
    assert canonical_form(ideal, reduced) == reduced


def test_canonical_form_congruence_property():
    rng = random.Random(271828)
    ideal = relation_ideal([rat(1)])
    reg = ideal.registry

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(0, 3) for _ in range(reg.num_vars))
            c = rng.randint(-5, 5)
            if c:
                terms[e] = terms.get(e, Fraction(0)) + c
        return MPoly(reg, terms)

    for _ in range(15):
        f, g = rand_poly(), rand_poly()
        direct = canonical_form(ideal, f * g)
        split = canonical_form(ideal, canonical_form(ideal, f) * canonical_form(ideal, g))
        assert direct == split


# numeric certification


def test_certify_zero_point_any_precision():
    ideal = relation_ideal([rat(0)])
    for bits in (128, 256):
        rec = certify_numeric(ideal, bits)
        assert rec.bits == bits
        for box in rec.boxes:
            assert box.contains_zero()


def test_certify_width_threshold():
    ideal = relation_ideal([rat(1)])
    rec = certify_numeric(ideal, 256)
    assert rec.max_width < Fraction(1, 1 << 100)
    for box in rec.boxes:
        assert box.contains_zero()


def test_certify_width_shrinks_with_precision():
    ideal = relation_ideal([rat(1), rat(2)])
    widths = [certify_numeric(ideal, bits).max_width for bits in (128, 256, 512)]
    assert widths[1] < widths[0]
    assert widths[2] < widths[1]


def test_certificate_summary_fields():
    ideal = relation_ideal([rat(1), rat(2)])
    rec = ideal.certificate
    assert rec.bits == 256
    assert len(rec.boxes) == len(ideal.generators)
    assert rec.max_width >= max(b.width() for b in rec.boxes)
    assert rec.max_abs >= 0
