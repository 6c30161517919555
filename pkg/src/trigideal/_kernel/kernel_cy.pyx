# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled backend for the sparse-polynomial inner loops.

Mirrors kernel_py function for function; exponent components fit in C
longs because every component is capped at EXP_LIMIT.  Coefficients
stay exact Python Fractions.
"""

from cpython.tuple cimport PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF

from trigideal.errors import ExponentOverflow

EXP_LIMIT = 1 << 15

KIND_LEX = 0
KIND_GREVLEX = 1
KIND_BLOCK = 2

cdef long _EXP_LIMIT_C = 1 << 15

cdef int _KIND_LEX = 0
cdef int _KIND_GREVLEX = 1
cdef int _KIND_BLOCK = 2


cdef inline long _comp(tuple u, Py_ssize_t i):
    return <long> (<object> PyTuple_GET_ITEM(u, i))


def exp_mul(tuple u, tuple v):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(u)
    cdef Py_ssize_t i
    cdef long s
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for i in range(n):
        s = _comp(u, i) + _comp(v, i)
        if s > _EXP_LIMIT_C:
            raise ExponentOverflow("exponent %d exceeds component limit" % s)
        item = s
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def exp_div(tuple u, tuple v):
    """Componentwise u - v; caller guarantees v divides u."""
    cdef Py_ssize_t n = PyTuple_GET_SIZE(u)
    cdef Py_ssize_t i
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for i in range(n):
        item = _comp(u, i) - _comp(v, i)
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def exp_divides(tuple u, tuple v):
    """True when the monomial with exponent u divides the one with v."""
    cdef Py_ssize_t n = PyTuple_GET_SIZE(u)
    cdef Py_ssize_t i
    for i in range(n):
        if _comp(u, i) > _comp(v, i):
            return False
    return True


def exp_lcm(tuple u, tuple v):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(u)
    cdef Py_ssize_t i
    cdef long a, b
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for i in range(n):
        a = _comp(u, i)
        b = _comp(v, i)
        item = a if a >= b else b
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


def exp_deg(tuple u):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(u)
    cdef Py_ssize_t i
    cdef long total = 0
    for i in range(n):
        total += _comp(u, i)
    return total


cdef tuple _negrev(tuple u, Py_ssize_t lo, Py_ssize_t hi):
    # (-u[hi-1], ..., -u[lo])
    cdef Py_ssize_t n = hi - lo
    cdef Py_ssize_t i
    cdef tuple out = PyTuple_New(n)
    cdef object item
    for i in range(n):
        item = -_comp(u, hi - 1 - i)
        Py_INCREF(item)
        PyTuple_SET_ITEM(out, i, item)
    return out


cdef long _sum_range(tuple u, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i
    cdef long total = 0
    for i in range(lo, hi):
        total += _comp(u, i)
    return total


def monomial_key(int kind, Py_ssize_t split, tuple u):
    """Order-isomorphic tuple key: bigger key means bigger monomial."""
    cdef Py_ssize_t n = PyTuple_GET_SIZE(u)
    if kind == _KIND_LEX:
        return u
    if kind == _KIND_GREVLEX:
        return (_sum_range(u, 0, n), _negrev(u, 0, n))
    return (_sum_range(u, 0, split), _negrev(u, 0, split), u[split:])


def monomial_cmp(int kind, Py_ssize_t split, tuple u, tuple v):
    if u == v:
        return 0
    if monomial_key(kind, split, u) > monomial_key(kind, split, v):
        return 1
    return -1


def leading_exp(int kind, Py_ssize_t split, terms):
    """Exponent of the order-largest term of a nonempty term dict."""
    cdef object best = None
    cdef object best_key = None
    cdef object ku
    for u in terms:
        ku = monomial_key(kind, split, <tuple> u)
        if best_key is None or ku > best_key:
            best = u
            best_key = ku
    return best


def find_divisor(list leads, tuple u):
    """Index of the first exponent in leads dividing u, or -1."""
    cdef Py_ssize_t i
    cdef Py_ssize_t n = len(leads)
    for i in range(n):
        if exp_divides(<tuple> leads[i], u):
            return i
    return -1


def sub_scaled(dict work, dict src, coeff, tuple shift):
    """In place: work -= coeff * monomial(shift) * src.  Zeros are dropped."""
    cdef Py_ssize_t n = PyTuple_GET_SIZE(shift)
    cdef Py_ssize_t i
    cdef bint shifted = False
    cdef object t, cur
    for i in range(n):
        if _comp(shift, i) != 0:
            shifted = True
            break
    if shifted:
        for e, c in src.items():
            t = exp_mul(<tuple> e, shift)
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


def mul_terms(dict a, dict b):
    """Product of two term dicts as a new term dict."""
    cdef dict out = {}
    cdef dict lo = a
    cdef dict hi = b
    cdef object t, cur
    if len(a) > len(b):
        lo = b
        hi = a
    for ua, ca in lo.items():
        for ub, cb in hi.items():
            t = exp_mul(<tuple> ua, <tuple> ub)
            cur = out.get(t)
            cur = ca * cb if cur is None else cur + ca * cb
            if cur:
                out[t] = cur
            elif t in out:
                del out[t]
    return out
