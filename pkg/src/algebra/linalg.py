"""Dense row reduction over F_p on numpy int64 arrays."""

import numpy as np
from numpy.typing import NDArray

Matrix = NDArray[np.int64]


def as_matrix(rows: list[list[int]], ncols: int, p: int) -> Matrix:
    if not rows:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), ncols) % p


def rref(matrix: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """
    Reduced row echelon form modulo p.

    Args:
        matrix: Integer matrix, entries taken modulo p.
        p: Prime modulus.

    Returns:
        The reduced matrix (zero rows dropped) and its pivot columns.
    """
    a = np.array(matrix, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        nonzero = np.nonzero(a[row:, col])[0]
        if len(nonzero) == 0:
            continue
        k = nonzero[0] + row
        if k != row:
            a[[row, k]] = a[[k, row]]
        inv = pow(int(a[row, col]), -1, p)
        a[row] = (a[row] * inv) % p
        factors = a[:, col].copy()
        factors[row] = 0
        a = (a - np.outer(factors, a[row])) % p
        pivots.append(col)
        row += 1
    return a[:row], pivots


def rank(matrix: Matrix, p: int) -> int:
    if matrix.size == 0:
        return 0
    return len(rref(matrix, p)[1])


def in_row_space(basis: Matrix, vector: list[int] | Matrix, p: int) -> bool:
    """Whether the vector is an F_p-combination of the rows of basis."""
    v = np.asarray(vector, dtype=np.int64).reshape(1, -1) % p
    if not v.any():
        return True
    if basis.size == 0:
        return False
    return rank(np.vstack([basis, v]), p) == rank(basis, p)
