"""Dense exact rational linear algebra (small matrices only)."""

from .rationals import QQ


def rref(rows, ncols):
    """Reduced row echelon form. Returns (rref_rows, pivot_columns)."""
    mat = [[QQ(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]], pivots


def rank(rows, ncols):
    if not rows:
        return 0
    return len(rref(rows, ncols)[0])


def nullspace(rows, ncols):
    """Basis of {x : Ax = 0} as a list of rational vectors."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [QQ(0)] * ncols
        v[fc] = QQ(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][fc]
        basis.append(tuple(v))
    return basis


def independent_row_indices(rows, ncols):
    """Indices of a subset of rows forming a basis of their row space."""
    kept = []
    reduced = {}  # pivot column -> normalized row
    for idx, row in enumerate(rows):
        work = [QQ(x) for x in row]
        for c, red in reduced.items():
            if work[c] != 0:
                f = work[c]
                work = [a - f * b for a, b in zip(work, red)]
        pivot = next((c for c in range(ncols) if work[c] != 0), None)
        if pivot is None:
            continue
        pv = work[pivot]
        reduced[pivot] = [x / pv for x in work]
        kept.append(idx)
    return kept


def independent_rows(rows, ncols):
    """Subset of the input rows forming a basis of their row space."""
    rows = list(rows)
    return [rows[i] for i in independent_row_indices(rows, ncols)]
