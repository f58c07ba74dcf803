"""Exact dense linear algebra over Q(zeta_m)(q) and Q(zeta_m).

Matrices are lists of rows.  Entries only need the field operators and an
``is_zero()`` method, so the same elimination code serves FieldElem and
CycloNumber matrices.
"""

from __future__ import annotations

from flint import fmpq_poly

from .ratfunc import FieldElem


def _clear_denominators(row):
    lcm = fmpq_poly(1)
    for x in row:
        d = x.den
        if not d.is_one():
            lcm = lcm * d / lcm.gcd(d)
    if lcm.is_one():
        return list(row)
    scale = FieldElem._raw(row[0].m, (lcm,) + (fmpq_poly(0),) * (len(row[0].nums) - 1),
                           fmpq_poly(1))
    return [x * scale for x in row]


def exact_rank(matrix) -> int:
    """Rank over Q(zeta_m)(q) by fraction-free (Bareiss) elimination.

    Rows are first scaled into the polynomial ring Q(zeta_m)[q]; every
    division performed afterwards is exact in that ring.
    """
    rows = [_clear_denominators(r) for r in matrix if r]
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    m = rows[0][0].m
    prev = FieldElem.one(m)
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        pivot = None
        for r in range(rank, nrows):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for r in range(rank + 1, nrows):
            row = rows[r]
            a = row[col]
            if a.is_zero():
                # row * p / prev, still exact
                rows[r] = row[:col + 1] + [
                    (x * p) / prev if not x.is_zero() else x for x in row[col + 1:]]
                continue
            rows[r] = row[:col + 1] + [
                (p * row[j] - a * prow[j]) / prev for j in range(col + 1, ncols)]
            rows[r][col] = FieldElem.zero(m)
        prev = p
        rank += 1
        col += 1
    return rank


def rank(matrix) -> int:
    """Rank by ordinary Gaussian elimination (any exact field)."""
    return len(rref(matrix)[1])


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return rows, []
    nrows, ncols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y if not y.is_zero() else x
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace(matrix, ncols: int, zero, one):
    """Basis of {x : matrix x = 0}; ``ncols`` is needed when matrix has no rows."""
    if not matrix:
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][f]
        basis.append(vec)
    return basis


def solve(columns, target, zero):
    """Solve sum_j x_j columns[j] = target for a square invertible system."""
    n = len(target)
    aug = [[columns[j][i] for j in range(len(columns))] + [target[i]] for i in range(n)]
    rows, pivots = rref(aug)
    if len(columns) in pivots:
        raise ArithmeticError("inconsistent linear system")
    if len(pivots) != len(columns):
        raise ArithmeticError("singular linear system")
    x = [zero] * len(columns)
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][-1]
    return x
