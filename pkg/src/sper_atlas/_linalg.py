"""Exact Gaussian elimination over Q or Q(sqrt 2).

Entries are ``int``/``Fraction`` or :class:`~sper_atlas.scalars.QuadExt`;
anything supporting field arithmetic and truthiness-as-nonzero works.
"""

from fractions import Fraction


def _field(x):
    return Fraction(x) if isinstance(x, int) else x


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(basis, pivots)`` where ``basis`` holds the nonzero reduced rows
    (pivot entries equal to 1) and ``pivots`` their pivot columns, increasing.
    """
    mat = [[_field(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def reduce_mod(vec, basis, pivots):
    """Reduce ``vec`` modulo the row space of an RREF ``basis``."""
    vec = list(vec)
    for row, p in zip(basis, pivots):
        f = vec[p]
        if f:
            vec = [x - f * y for x, y in zip(vec, row)]
    return vec


def integer_inverse(matrix):
    """Inverse of a square integer matrix; raises unless the determinant is +-1."""
    n = len(matrix)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    basis, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(basis) < n:
        raise ValueError("matrix is singular")
    inv = [row[n:] for row in basis]
    out = []
    for row in inv:
        if any(Fraction(x).denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out
