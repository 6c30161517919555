"""Buchberger's algorithm with the product and chain criteria, reduced
Groebner bases, elimination-ideal extraction, and ideal membership.

The pair queue follows the normal strategy (minimal lcm first in the
active order).  Intermediate results keep exact rational coefficients;
integer content is stripped after every reduction to bound growth.
Optional division certificates express each output generator as an
explicit polynomial combination of the inputs.
"""

import heapq
import os
from fractions import Fraction

from . import _kernel as K
from .errors import CertificationFailure, RegistryMismatch, ResourceLimit, WrongOrder
from .polyring import (
    MPoly,
    leading_term,
    multidivide,
    normal_form,
    primitive_part,
)


class GroebnerBasis:
    """Reduced basis: monic, inter-reduced, sorted descending by leading term."""

    __slots__ = ("generators", "order", "registry", "certificates")

    def __init__(self, generators, order, certificates=None):
        self.generators = tuple(generators)
        self.order = order
        self.registry = order.registry
        self.certificates = None if certificates is None else tuple(certificates)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.generators == other.generators

    def __hash__(self):
        return hash((self.order, self.generators))

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "GroebnerBasis(%d generators, %s)" % (len(self.generators), self.order.kind)


def s_polynomial(f, g, order):
    """(lcm/LT(f)) f - (lcm/LT(g)) g; the leading terms cancel."""
    f._check(g)
    uf, cf = leading_term(f, order)
    ug, cg = leading_term(g, order)
    l = K.exp_lcm(uf, ug)
    work = {}
    K.sub_scaled(work, f.terms, -1 / cf, K.exp_div(l, uf))
    K.sub_scaled(work, g.terms, 1 / cg, K.exp_div(l, ug))
    return MPoly(f.registry, work)


def _mono(reg, exp, coeff):
    return MPoly(reg, {exp: coeff})


def _strip(f, cert, order):
    """Content-strip f; rescale the certificate by the same factor."""
    g = primitive_part(f, order)
    if cert is not None and not f.is_zero():
        _, cf = leading_term(f, order)
        _, cg = leading_term(g, order)
        s = cg / cf
        cert = [c * s for c in cert]
    return g, cert


def _reduce(f, cert, basis, basis_certs, order):
    """Full normal form of f against basis; certificate updated to match."""
    if not basis:
        return f, cert
    if cert is None:
        return normal_form(f, basis, order), None
    quots, rem = multidivide(f, basis, order)
    out = list(cert)
    for q, bc in zip(quots, basis_certs):
        if q.is_zero():
            continue
        for t in range(len(out)):
            if not bc[t].is_zero():
                out[t] = out[t] - q * bc[t]
    return rem, out


def buchberger(gens, order, max_pairs=10**6, certificates=False):
    """Reduced Groebner basis of the ideal generated by gens.

    Deterministic: normal pair-selection strategy, product and chain
    criteria, final minimalization, inter-reduction, and monicization.
    Raises ResourceLimit after max_pairs processed pairs.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    reg = order.registry
    for g in gens:
        if g.registry != reg:
            raise RegistryMismatch("generator registry differs from order registry")
    if all(g.is_zero() for g in gens):
        raise ValueError("all generators are zero")

    G = []
    leads = []
    certs = []
    heap = []
    pending = set()

    def add_poly(p, cert):
        idx = len(G)
        u = leading_term(p, order)[0]
        for j in range(idx):
            l = K.exp_lcm(leads[j], u)
            heapq.heappush(heap, (order.key(l), j, idx, l))
            pending.add((j, idx))
        G.append(p)
        leads.append(u)
        certs.append(cert)

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        cert = None
        if certificates:
            cert = [
                _mono(reg, reg.zero_exp(), Fraction(1)) if t == i else MPoly(reg, {})
                for t in range(len(gens))
            ]
        p, cert = _strip(g, cert, order)
        add_poly(p, cert)

    processed = 0
    while heap:
        _, i, j, l = heapq.heappop(heap)
        pending.discard((i, j))
        processed += 1
        if processed > max_pairs:
            raise ResourceLimit("pair limit %d exceeded" % max_pairs)
        # product criterion: coprime leading monomials reduce to zero
        if l == K.exp_mul(leads[i], leads[j]):
            continue
        # chain criterion: a third leading term divides the lcm and both
        # linking pairs have already been handled
        skip = False
        for t in range(len(G)):
            if t == i or t == j:
                continue
            if K.exp_divides(leads[t], l):
                a = (i, t) if i < t else (t, i)
                b = (j, t) if j < t else (t, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = s_polynomial(G[i], G[j], order)
        scert = None
        if certificates:
            _, ci = leading_term(G[i], order)
            _, cj = leading_term(G[j], order)
            mi = _mono(reg, K.exp_div(l, leads[i]), 1 / ci)
            mj = _mono(reg, K.exp_div(l, leads[j]), 1 / cj)
            scert = [mi * a - mj * b for a, b in zip(certs[i], certs[j])]
        rem, rcert = _reduce(s, scert, G, certs, order)
        if rem.is_zero():
            continue
        rem, rcert = _strip(rem, rcert, order)
        add_poly(rem, rcert)

    # minimal subset: drop any generator whose leading term another divides
    idx_sorted = sorted(range(len(G)), key=lambda i: order.key(leads[i]))
    kept = []
    for i in idx_sorted:
        if not any(K.exp_divides(leads[j], leads[i]) for j in kept):
            kept.append(i)
    basis = [G[i] for i in kept]
    bcerts = [certs[i] for i in kept] if certificates else [None] * len(kept)

    # inter-reduce: one full pass suffices since leading terms are fixed
    for i in range(len(basis)):
        others = basis[:i] + basis[i + 1 :]
        ocerts = bcerts[:i] + bcerts[i + 1 :]
        basis[i], bcerts[i] = _reduce(basis[i], bcerts[i], others, ocerts, order)

    # monic, then sort descending by leading term
    for i in range(len(basis)):
        _, lc = leading_term(basis[i], order)
        basis[i] = basis[i] * (1 / lc)
        if certificates:
            bcerts[i] = [c * (1 / lc) for c in bcerts[i]]
    tagged = sorted(
        range(len(basis)),
        key=lambda i: order.key(leading_term(basis[i], order)[0]),
        reverse=True,
    )
    basis = [basis[i] for i in tagged]
    bcerts = [bcerts[i] for i in tagged]

    if os.environ.get("TRIGIDEAL_SELFCHECK", "") == "1":
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                s = s_polynomial(basis[a], basis[b], order)
                if not normal_form(s, basis, order).is_zero():
                    raise CertificationFailure("s-polynomial failed to reduce to zero")

    return GroebnerBasis(basis, order, bcerts if certificates else None)


def eliminate(gb):
    """Generators free of every W/Z variable: a reduced basis of the
    elimination ideal when gb was computed under block_elim."""
    if gb.order.kind != "block_elim":
        raise WrongOrder("elimination requires the block_elim order")
    split = gb.registry.split
    out = []
    for g in gb.generators:
        if all(not any(u[:split]) for u in g.terms):
            out.append(g)
    return out


def member(f, gb):
    """(f in ideal, canonical normal form of f modulo gb)."""
    if f.registry != gb.registry:
        raise RegistryMismatch("polynomial registry differs from basis registry")
    nf = normal_form(f, list(gb.generators), gb.order)
    return nf.is_zero(), nf
