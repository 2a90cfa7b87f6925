"""Exact nullspaces.

``rational_nullspace`` clears denominators row by row and runs fraction-free
(Bareiss) elimination on Python integers.  ``field_nullspace`` is plain
Gauss-Jordan for any exact field type (rational functions, number-field
elements) that supports ``+ - * /`` and truthiness.
"""
from math import lcm

from gmpy2 import mpq, mpz

from .rational import as_rational

__all__ = ["rational_nullspace", "field_nullspace", "rational_rank"]


def _integer_rows(matrix):
    rows = []
    for row in matrix:
        row = [as_rational(x) for x in row]
        d = 1
        for x in row:
            d = lcm(d, int(x.denominator))
        rows.append([mpz(x * d) for x in row])
    return rows


def _echelon(rows, ncols):
    """Fraction-free row echelon form; returns (rows, pivot columns)."""
    m = [r[:] for r in rows]
    nrows = len(m)
    prev = mpz(1)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        rowr = m[r]
        for i in range(r + 1, nrows):
            rowi = m[i]
            f = rowi[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    rowi[j] = rowi[j] * piv // prev
            else:
                for j in range(c + 1, ncols):
                    rowi[j] = (piv * rowi[j] - f * rowr[j]) // prev
            rowi[c] = mpz(0)
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rational_rank(matrix):
    if not matrix:
        return 0
    rows = _integer_rows(matrix)
    return len(_echelon(rows, len(rows[0]))[1])


def rational_nullspace(matrix, ncols=None):
    """Basis of ``{v : M v = 0}``; each vector has a 1 in one free slot."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[mpq(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows = _integer_rows(matrix)
    ech, pivots = _echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [mpq(0)] * ncols
        x[f] = mpq(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = ech[k]
            s = mpq(0)
            for j in range(c + 1, ncols):
                if row[j] != 0 and x[j] != 0:
                    s += row[j] * x[j]
            x[c] = -s / row[c]
        basis.append(x)
    return basis


def field_nullspace(matrix, ncols=None, one=None):
    """Nullspace over an exact field by Gauss-Jordan elimination."""
    if ncols is None:
        ncols = len(matrix[0])
    m = [list(r) for r in matrix]
    sample = next((x for r in m for x in r), None)
    if one is None:
        one = sample * 0 + 1 if sample is not None else mpq(1)
    zero = one * 0
    r = 0
    pivots = []
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = one / m[r][c]
        m[r] = [x * inv if x else zero for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for k, c in enumerate(pivots):
            x[c] = -m[k][f]
        basis.append(x)
    return basis
