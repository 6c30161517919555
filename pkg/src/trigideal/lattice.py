"""Exact LLL lattice reduction over the integers.

The all-integer variant: instead of rational Gram-Schmidt data it
maintains d[i] (the Gram determinants of leading subbases) and
lam[i][j] = mu[i][j] * d[j+1], all integers, so reduction of a basis of
integer vectors never leaves the integers.  Quality factor delta = 3/4,
giving the classic guarantee |b_1|^2 <= 2**(n-1) * |v|^2 for every
nonzero lattice vector v; callers use that bound to certify that no
short relation vector exists.
"""


def _round_div(a, b):
    """Nearest integer to a / b for b > 0 (ties toward +inf)."""
    return (2 * a + b) // (2 * b)


def norm_sq(row):
    return sum(x * x for x in row)


def lll_reduce(rows):
    """Return a delta=3/4 LLL-reduced basis of the lattice the rows span.

    Rows must be linearly independent integer vectors; the input list is
    not modified.  Raises ValueError on dependent rows (a zero Gram
    determinant), which callers avoid by construction.
    """
    b = [list(map(int, r)) for r in rows]
    n = len(b)
    if n == 0:
        return []
    width = len(b[0])
    if any(len(r) != width for r in b):
        raise ValueError("ragged rows")
    if n == 1:
        return b

    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = sum(x * y for x, y in zip(b[i], b[j]))
            for t in range(j):
                u = (d[t + 1] * u - lam[i][t] * lam[j][t]) // d[t]
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise ValueError("rows are linearly dependent")
                d[i + 1] = u

    def redi(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = _round_div(lam[k][l], d[l + 1])
            bk, bl = b[k], b[l]
            for t in range(width):
                bk[t] -= q * bl[t]
            lam[k][l] -= q * d[l + 1]
            for t in range(l):
                lam[k][t] -= q * lam[l][t]

    k = 1
    while k < n:
        redi(k, k - 1)
        lkk = lam[k][k - 1]
        if 4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lkk * lkk:
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            lk = lam[k][k - 1]
            newd = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
                lam[i][k - 1] = (newd * t + lk * lam[i][k]) // d[k + 1]
            d[k] = newd
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                redi(k, l)
            k += 1
    return b
