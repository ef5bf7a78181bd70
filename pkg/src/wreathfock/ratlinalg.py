"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of Fractions.  Pivot choice is deterministic:
columns left to right, first row with a nonzero entry.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _copy(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    m = _copy(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows):
    """Basis of the right null space {x : rows @ x = 0}, one vector per free
    column, in column order."""
    if not rows:
        return []
    m, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of rows @ x = rhs (free variables zero), or None."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    ncols = len(rows[0]) if rows else 0
    if ncols in pivots:  # pivot in the augmented column: inconsistent
        return None
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def det(rows) -> Fraction:
    m = _copy(rows)
    n = len(m)
    assert all(len(row) == n for row in m)
    d = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d *= m[c][c]
        inv = ONE / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def inverse(rows):
    n = len(rows)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
           for i, row in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m[:n]]


def span_select(vectors):
    """Rank of a family plus the indices of a spanning subfamily.

    Vectors are scanned in order and kept when independent of those already
    kept, so the selection is deterministic.
    """
    basis = []  # (pivot column, reduced vector)
    selected = []
    for idx, vec in enumerate(vectors):
        v = [Fraction(x) for x in vec]
        for pc, b in basis:
            if v[pc] != 0:
                f = v[pc]
                v = [a - f * c for a, c in zip(v, b)]
        pc = next((c for c, x in enumerate(v) if x != 0), None)
        if pc is None:
            continue
        inv = ONE / v[pc]
        v = [x * inv for x in v]
        basis.append((pc, v))
        selected.append(idx)
    return len(selected), selected
