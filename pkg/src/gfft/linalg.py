"""Exact dense linear algebra over a Field, on raw-value row lists."""

from __future__ import annotations

from .errors import SingularMatrix


def _eliminate(field, rows):
    """Row-reduce in place to row echelon form; returns pivot column list."""
    f = field
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot = None
        for i in range(row, n_rows):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = f.inv(rows[row][col])
        rows[row] = [f.mul(inv, v) for v in rows[row]]
        for i in range(n_rows):
            if i != row and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], rows[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    return pivots


def solve(field, matrix, rhs):
    """Solve M x = rhs exactly; raises SingularMatrix if not uniquely solvable."""
    n = len(matrix)
    rows = [list(r) + [v] for r, v in zip(matrix, rhs)]
    pivots = _eliminate(field, rows)
    width = len(matrix[0])
    if any(p == width for p in pivots):
        raise SingularMatrix("inconsistent system")
    if len([p for p in pivots if p < width]) < width:
        raise SingularMatrix("underdetermined system")
    x = [0] * width
    for r, p in zip(rows, pivots):
        x[p] = r[-1]
    # echelon rows beyond the pivot count must be all zero for consistency
    for r in rows[len(pivots) :]:
        if any(r):
            raise SingularMatrix("inconsistent system")
    return x


def invert(field, matrix):
    n = len(matrix)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(matrix)]
    pivots = _eliminate(field, rows)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise SingularMatrix("matrix not invertible")
    out = [[0] * n for _ in range(n)]
    for r, p in zip(rows, pivots):
        out[p] = r[n:]
    return out


def nullspace_vector(field, matrix):
    """One nonzero kernel vector of M, or None if the kernel is trivial."""
    f = field
    n_cols = len(matrix[0])
    rows = [list(r) for r in matrix]
    pivots = _eliminate(field, rows)
    free = [c for c in range(n_cols) if c not in pivots]
    if not free:
        return None
    col = free[0]
    vec = [0] * n_cols
    vec[col] = 1
    for r, p in zip(rows, pivots):
        vec[p] = f.neg(r[col])
    return vec


def mat_vec(field, matrix, vec):
    f = field
    out = []
    for row in matrix:
        acc = 0
        for a, b in zip(row, vec):
            if a and b:
                acc = f.add(acc, f.mul(a, b))
        out.append(acc)
    return out
