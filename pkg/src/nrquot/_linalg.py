"""Small exact linear algebra over Fraction: rref, rank, kernel, det, inverse.

Matrices are lists of row tuples/lists of Fractions.  Sizes here are tiny
(torus ranks and per-degree basis sizes), so plain Gauss-Jordan with exact
pivoting is all we need.
"""

from fractions import Fraction

from .exactnum import as_fraction


def to_matrix(rows):
    return [[as_fraction(x) for x in row] for row in rows]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            ail = a[i][l]
            if ail == 0:
                continue
            for j in range(m):
                out[i][j] += ail * b[l][j]
    return out


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(len(v))), Fraction(0)) for i in range(len(a))]


def rref(rows):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m[:row], pivots


def rank(rows):
    return len(rref(rows)[1])


def det(rows):
    """Exact determinant by fraction Gaussian elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    result = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return result


def inverse(rows):
    """Exact inverse; raises ValueError on singular input."""
    n = len(rows)
    aug = [list(r) + identity(n)[i] for i, r in enumerate(rows)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is not invertible")
    return [row[n:] for row in reduced]


def kernel_basis(rows, ncols):
    """Basis of the right kernel of the matrix (rows of length ncols)."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(reduced, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def independent_subset(vectors):
    """Indices of a maximal linearly independent subset, scanning in order."""
    picked = []
    rows = []
    current_rank = 0
    for i, v in enumerate(vectors):
        candidate = rows + [list(v)]
        r = rank(candidate)
        if r > current_rank:
            picked.append(i)
            rows = candidate
            current_rank = r
    return picked
