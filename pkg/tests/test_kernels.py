"""Differential tests: compiled kernel must match the pure one exactly."""

import random
from fractions import Fraction

import pytest

from trigideal import _kernel as K
from trigideal._kernel import kernel_py
from trigideal.errors import ExponentOverflow

kernel_cy = pytest.importorskip(
    "trigideal._kernel.kernel_cy", reason="compiled backend not built"
)

BACKENDS = (kernel_py, kernel_cy)
KINDS = (kernel_py.KIND_LEX, kernel_py.KIND_GREVLEX, kernel_py.KIND_BLOCK)


def rand_exp(rng, width, hi=6):
    return tuple(rng.randint(0, hi) for _ in range(width))


def rand_terms(rng, width, max_terms=6):
    out = {}
    for _ in range(rng.randint(1, max_terms)):
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if c:
            out[rand_exp(rng, width)] = c
    return out


def test_constants_match():
    assert kernel_cy.EXP_LIMIT == kernel_py.EXP_LIMIT
    assert kernel_cy.KIND_LEX == kernel_py.KIND_LEX
    assert kernel_cy.KIND_GREVLEX == kernel_py.KIND_GREVLEX
    assert kernel_cy.KIND_BLOCK == kernel_py.KIND_BLOCK


def test_exp_ops_agree():
    rng = random.Random(1100)
    for _ in range(400):
        width = rng.randint(1, 8)
        u = rand_exp(rng, width)
        v = rand_exp(rng, width)
        assert kernel_cy.exp_mul(u, v) == kernel_py.exp_mul(u, v)
        assert kernel_cy.exp_lcm(u, v) == kernel_py.exp_lcm(u, v)
        assert kernel_cy.exp_deg(u) == kernel_py.exp_deg(u)
        assert kernel_cy.exp_divides(u, v) == kernel_py.exp_divides(u, v)
        w = kernel_py.exp_lcm(u, v)
        assert kernel_cy.exp_div(w, u) == kernel_py.exp_div(w, u)


def test_exp_mul_overflow_agrees():
    limit = kernel_py.EXP_LIMIT
    at = (limit - 1, 0)
    assert kernel_cy.exp_mul(at, (1, 0)) == kernel_py.exp_mul(at, (1, 0))
    for impl in BACKENDS:
        with pytest.raises(ExponentOverflow):
            impl.exp_mul((limit, 0), (1, 0))


def test_monomial_key_and_cmp_agree():
    rng = random.Random(1101)
    for _ in range(400):
        width = rng.randint(1, 8)
        split = 2 * rng.randint(0, width // 2)
        u = rand_exp(rng, width)
        v = rand_exp(rng, width)
        for kind in KINDS:
            assert kernel_cy.monomial_key(kind, split, u) == kernel_py.monomial_key(
                kind, split, u
            )
            assert kernel_cy.monomial_cmp(kind, split, u, v) == kernel_py.monomial_cmp(
                kind, split, u, v
            )


def test_leading_exp_agrees():
    rng = random.Random(1102)
    for _ in range(200):
        width = rng.randint(1, 6)
        split = 2 * rng.randint(0, width // 2)
        terms = rand_terms(rng, width)
        for kind in KINDS:
            assert kernel_cy.leading_exp(kind, split, terms) == kernel_py.leading_exp(
                kind, split, terms
            )


def test_find_divisor_agrees():
    rng = random.Random(1103)
    for _ in range(200):
        width = rng.randint(1, 6)
        leads = [rand_exp(rng, width, 3) for _ in range(rng.randint(1, 5))]
        u = rand_exp(rng, width, 3)
        assert kernel_cy.find_divisor(leads, u) == kernel_py.find_divisor(leads, u)


def test_sub_scaled_agrees():
    rng = random.Random(1104)
    for _ in range(200):
        width = rng.randint(1, 6)
        work = rand_terms(rng, width)
        src = rand_terms(rng, width)
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        shift = rand_exp(rng, width, 2) if rng.random() < 0.5 else (0,) * width
        a = dict(work)
        b = dict(work)
        kernel_py.sub_scaled(a, src, coeff, shift)
        kernel_cy.sub_scaled(b, src, coeff, shift)
        assert a == b
        assert all(c != 0 for c in b.values())


def test_mul_terms_agrees():
    rng = random.Random(1105)
    for _ in range(200):
        width = rng.randint(1, 6)
        a = rand_terms(rng, width)
        b = rand_terms(rng, width)
        assert kernel_cy.mul_terms(a, b) == kernel_py.mul_terms(a, b)


def test_selected_backend_exports_full_surface():
    for name in (
        "EXP_LIMIT",
        "KIND_LEX",
        "KIND_GREVLEX",
        "KIND_BLOCK",
        "exp_mul",
        "exp_div",
        "exp_divides",
        "exp_lcm",
        "exp_deg",
        "monomial_key",
        "monomial_cmp",
        "leading_exp",
        "find_divisor",
        "sub_scaled",
        "mul_terms",
    ):
        assert hasattr(K, name)
    assert K.BACKEND in ("pure", "compiled")


def test_pipeline_matches_across_backends():
    # end-to-end: the eliminated generators must not depend on the backend
    import json
    import os
    import subprocess
    import sys

    script = (
        "import json\n"
        "from fractions import Fraction\n"
        "from trigideal import _kernel as K\n"
        "from trigideal.algebraic import AlgebraicNumber\n"
        "from trigideal.polyring import format_poly\n"
        "from trigideal.trig import relation_ideal\n"
        "pts = [AlgebraicNumber.from_rational(Fraction(1)),"
        " AlgebraicNumber.from_rational(Fraction(2))]\n"
        "ideal = relation_ideal(pts)\n"
        "print(json.dumps({'backend': K.BACKEND, 'gens':"
        " [format_poly(g, ideal.xy_gb.order) for g in ideal.generators]}))\n"
    )
    results = {}
    for choice in ("pure", "compiled"):
        env = dict(os.environ, TRIGIDEAL_BACKEND=choice)
        proc = subprocess.run(
            [sys.executable, "-c", script], env=env, capture_output=True, text=True
        )
        assert proc.returncode == 0, proc.stderr
        doc = json.loads(proc.stdout)
        assert doc["backend"] == choice
        results[choice] = doc["gens"]
    assert results["pure"] == results["compiled"]
