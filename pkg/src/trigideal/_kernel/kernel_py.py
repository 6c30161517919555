"""Pure-Python backend for the sparse-polynomial inner loops.

The compiled backend (kernel_cy) mirrors this module function for
function; the package selects one at import time.  Exponent vectors are
tuples of small nonnegative ints, coefficients exact Fractions.  Every
exponent component is capped at EXP_LIMIT so the compiled backend can
hold components in fixed-width machine integers.
"""

from trigideal.errors import ExponentOverflow

EXP_LIMIT = 1 << 15

KIND_LEX = 0
KIND_GREVLEX = 1
KIND_BLOCK = 2


def exp_mul(u, v):
    out = []
    for a, b in zip(u, v):
        s = a + b
        if s > EXP_LIMIT:
            raise ExponentOverflow("exponent %d exceeds component limit" % s)
        out.append(s)
    return tuple(out)


def exp_div(u, v):
    """Componentwise u - v; caller guarantees v divides u."""
    return tuple(a - b for a, b in zip(u, v))


def exp_divides(u, v):
    """True when the monomial with exponent u divides the one with v."""
    for a, b in zip(u, v):
        if a > b:
            return False
    return True


def exp_lcm(u, v):
    return tuple(a if a >= b else b for a, b in zip(u, v))


def exp_deg(u):
    return sum(u)


def monomial_key(kind, split, u):
    """Order-isomorphic tuple key: bigger key means bigger monomial."""
    if kind == KIND_LEX:
        return u
    if kind == KIND_GREVLEX:
        return (sum(u), tuple(-x for x in reversed(u)))
    wz = u[:split]
    return (sum(wz), tuple(-x for x in reversed(wz)), u[split:])


def monomial_cmp(kind, split, u, v):
    if u == v:
        return 0
    if monomial_key(kind, split, u) > monomial_key(kind, split, v):
        return 1
    return -1


def leading_exp(kind, split, terms):
    """Exponent of the order-largest term of a nonempty term dict."""
    best = None
    best_key = None
    for u in terms:
        ku = monomial_key(kind, split, u)
        if best_key is None or ku > best_key:
            best = u
            best_key = ku
    return best


def find_divisor(leads, u):
    """Index of the first exponent in leads dividing u, or -1."""
    for i, e in enumerate(leads):
        if exp_divides(e, u):
            return i
    return -1


def sub_scaled(work, src, coeff, shift):
    """In place: work -= coeff * monomial(shift) * src.  Zeros are dropped."""
    if any(shift):
        for e, c in src.items():
            t = exp_mul(e, shift)
            cur = work.get(t)
            cur = -coeff * c if cur is None else cur - coeff * c
            if cur:
                work[t] = cur
            elif t in work:
                del work[t]
    else:
        for e, c in src.items():
            cur = work.get(e)
            cur = -coeff * c if cur is None else cur - coeff * c
            if cur:
                work[e] = cur
            elif e in work:
                del work[e]


def mul_terms(a, b):
    """Product of two term dicts as a new term dict."""
    out = {}
    if len(a) > len(b):
        a, b = b, a
    for ua, ca in a.items():
        for ub, cb in b.items():
            t = exp_mul(ua, ub)
            cur = out.get(t)
            cur = ca * cb if cur is None else cur + ca * cb
            if cur:
                out[t] = cur
            elif t in out:
                del out[t]
    return out
