"""Tests for the Buchberger engine: S-polynomials, reduced bases,
elimination, membership, and division certificates."""

import random
from fractions import Fraction

import pytest

from trigideal.errors import RegistryMismatch, ResourceLimit, WrongOrder
from trigideal.groebner import GroebnerBasis, buchberger, eliminate, member, s_polynomial
from trigideal.polyring import (
    MonomialOrder,
    MPoly,
    VariableRegistry,
    leading_term,
    normal_form,
)


def rand_poly(reg, rng, max_terms=3, max_deg=2):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * reg.num_vars
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(reg.num_vars)] += 1
        c = rng.randint(-4, 4)
        if c:
            terms[tuple(e)] = terms.get(tuple(e), Fraction(0)) + c
    return MPoly(reg, terms)


def rand_instance(rng):
    reg = rng.choice([VariableRegistry(1, 0), VariableRegistry(1, 1)])
    kind = rng.choice(["lex", "grevlex", "block_elim"])
    order = MonomialOrder(kind, reg)
    gens = []
    while len(gens) < 2:
        g = rand_poly(reg, rng)
        if not g.is_zero():
            gens.append(g)
    return reg, order, gens


# s_polynomial


def test_s_polynomial_self_pair_vanishes():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    f = reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1
    assert s_polynomial(f, f, order).is_zero()


def test_s_polynomial_golden():
    # lcm = X1^2; S = f - X1*X1 = Y1^2 - 1
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    f = reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1
    g = reg.var("X", 1)
    assert s_polynomial(f, g, order) == reg.var("Y", 1) ** 2 - 1


def test_s_polynomial_cancels_leading_terms():
    from trigideal import _kernel as K

    rng = random.Random(4711)
    reg = VariableRegistry(2)
    order = MonomialOrder("lex", reg)
    done = 0
    while done < 100:
        f = rand_poly(rng=rng, reg=reg)
        g = rand_poly(rng=rng, reg=reg)
        if f.is_zero() or g.is_zero():
            continue
        done += 1
        l = K.exp_lcm(leading_term(f, order)[0], leading_term(g, order)[0])
        s = s_polynomial(f, g, order)
        if not s.is_zero():
            assert order.compare(leading_term(s, order)[0], l) < 0


# buchberger goldens


def test_single_generator_already_basis():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    f = reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1
    gb = buchberger([f], order)
    assert gb.generators == (f,)
    assert gb.order == order
    assert gb.registry == reg


def test_unit_ideal_collapses_to_one():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    x = reg.var("X", 1)
    gb = buchberger([x, x + 1], order)
    assert gb.generators == (reg.constant(1),)


def test_textbook_lex_basis():
    # ideal <x^2 - y, x^3 - x> has reduced lex basis {x^2-y, xy-x, y^2-y},
    # worked by hand via two S-polynomial reductions
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    x, y = reg.var("X", 1), reg.var("Y", 1)
    gb = buchberger([x**2 - y, x**3 - x], order)
    assert gb.generators == (x**2 - y, x * y - x, y**2 - y)


def test_substitution_ideal_block_order():
    reg = VariableRegistry(1, 1)
    order = MonomialOrder("block_elim", reg)
    x, y = reg.var("X", 1), reg.var("Y", 1)
    w, z = reg.var("W", 1), reg.var("Z", 1)
    gens = [x - w, y - z, w**2 + z**2 - 1]
    gb = buchberger(gens, order)
    expected = {w - x, z - y, x**2 + y**2 - 1}
    assert set(gb.generators) == expected
    # membership both ways against the hand-derived basis (pairwise-coprime
    # leading terms, so it is itself a Groebner basis)
    for g in gb.generators:
        assert normal_form(g, list(expected), order).is_zero()
    for g in expected:
        assert member(g, gb)[0]


def test_pythagorean_is_only_wz_free_generator():
    reg = VariableRegistry(1, 1)
    order = MonomialOrder("block_elim", reg)
    x, y = reg.var("X", 1), reg.var("Y", 1)
    w, z = reg.var("W", 1), reg.var("Z", 1)
    gb = buchberger([x - w, y - z, w**2 + z**2 - 1], order)
    free = eliminate(gb)
    assert free == [x**2 + y**2 - 1]


# eliminate


def test_eliminate_nothing_to_project():
    reg = VariableRegistry(1, 1)
    order = MonomialOrder("block_elim", reg)
    w, z = reg.var("W", 1), reg.var("Z", 1)
    gb = buchberger([w**2 + z**2 - 1], order)
    assert eliminate(gb) == []


def test_eliminate_passes_wz_free_generator_through():
    reg = VariableRegistry(1, 1)
    order = MonomialOrder("block_elim", reg)
    gb = buchberger([reg.var("X", 1) - 1, reg.var("W", 1)], order)
    assert eliminate(gb) == [reg.var("X", 1) - 1]


def test_eliminate_requires_block_order():
    reg = VariableRegistry(1, 1)
    for kind in ("lex", "grevlex"):
        order = MonomialOrder(kind, reg)
        gb = buchberger([reg.var("X", 1)], order)
        with pytest.raises(WrongOrder):
            eliminate(gb)


# member


def test_member_zero_polynomial():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    gb = buchberger([reg.var("X", 1) ** 2 + reg.var("Y", 1) ** 2 - 1], order)
    ok, nf = member(reg.constant(0), gb)
    assert ok and nf.is_zero()


def test_member_generator_and_non_member():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    x, y = reg.var("X", 1), reg.var("Y", 1)
    gb = buchberger([x**2 + y**2 - 1], order)
    ok, nf = member(x**2 + y**2 - 1, gb)
    assert ok and nf.is_zero()
    ok, nf = member(x + y, gb)
    assert not ok and nf == x + y


def test_member_registry_mismatch():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    gb = buchberger([reg.var("X", 1)], order)
    with pytest.raises(RegistryMismatch):
        member(VariableRegistry(2).var("X", 1), gb)


# engine properties


def test_inputs_reduce_to_zero_and_certificates_reconstruct():
    rng = random.Random(2718)
    for _ in range(25):
        reg, order, gens = rand_instance(rng)
        gb = buchberger(gens, order, certificates=True)
        for g in gens:
            assert member(g, gb)[0]
        assert gb.certificates is not None
        for out, cert in zip(gb.generators, gb.certificates):
            total = MPoly(reg, {})
            for c, g in zip(cert, gens):
                total = total + c * g
            assert total == out


def test_permutation_invariance():
    rng = random.Random(1618)
    for cnt in range(15):
        reg, order, gens = rand_instance(rng)
        gens.append(rand_poly(reg, rng))
        gens = [g for g in gens if not g.is_zero()]
        gb = buchberger(gens, order)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, order) == gb


def test_normal_form_invariant_under_generator_permutation():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    x, y = reg.var("X", 1), reg.var("Y", 1)
    gb = buchberger([x**2 - y, x**3 - x], order)
    flipped = GroebnerBasis(tuple(reversed(gb.generators)), order)
    rng = random.Random(5)
    for _ in range(20):
        f = rand_poly(reg, rng, max_terms=4, max_deg=4)
        assert member(f, gb)[1] == member(f, flipped)[1]


def test_deterministic_repeat():
    reg = VariableRegistry(1, 1)
    order = MonomialOrder("block_elim", reg)
    gens = [
        reg.var("X", 1) - reg.var("W", 1) ** 2,
        reg.var("Y", 1) - reg.var("Z", 1) * reg.var("W", 1),
        reg.var("W", 1) ** 2 + reg.var("Z", 1) ** 2 - 1,
    ]
    assert buchberger(gens, order) == buchberger(gens, order)


def test_default_has_no_certificates():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    gb = buchberger([reg.var("X", 1)], order)
    assert gb.certificates is None


# resource and input validation


def test_pair_limit_raises():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    x, y = reg.var("X", 1), reg.var("Y", 1)
    with pytest.raises(ResourceLimit):
        buchberger([x * y - 1, y**2 - 1], order, max_pairs=0)


def test_rejects_empty_and_all_zero():
    reg = VariableRegistry(1)
    order = MonomialOrder("lex", reg)
    with pytest.raises(ValueError):
        buchberger([], order)
    with pytest.raises(ValueError):
        buchberger([reg.constant(0)], order)


def test_rejects_foreign_registry():
    order = MonomialOrder("lex", VariableRegistry(1))
    with pytest.raises(RegistryMismatch):
        buchberger([VariableRegistry(2).var("X", 1)], order)
