"""Jacobi and zero fill-in incomplete Cholesky preconditioners."""

import math

import numpy as np
from scipy.sparse import csr_matrix, tril
from scipy.sparse.linalg import spsolve_triangular

from src.domain.entities import PreconditionerKind
from src.domain.exceptions import FactorizationException
from src.domain.repositories import IPreconditioner


class IdentityPreconditioner(IPreconditioner):
    kind = PreconditionerKind.NONE

    def apply(self, residual: np.ndarray) -> np.ndarray:
        return residual.copy()


class JacobiPreconditioner(IPreconditioner):
    """Diagonal scaling; nonpositive diagonal entries are left unscaled."""

    kind = PreconditionerKind.JACOBI

    def __init__(self, matrix: csr_matrix):
        diagonal = matrix.diagonal()
        self._inverse = np.where(diagonal > 0.0, 1.0 / np.where(diagonal > 0.0, diagonal, 1.0), 1.0)

    def apply(self, residual: np.ndarray) -> np.ndarray:
        return self._inverse * residual


def ic0_factorize(matrix: csr_matrix) -> csr_matrix:
    """Lower factor L with L L^T ~ A, restricted to the pattern of tril(A).

    Raises:
        FactorizationException: on a nonpositive or non-finite pivot.
    """
    lower = tril(matrix, format="csr")
    lower.sort_indices()
    n = lower.shape[0]
    rows: list[dict[int, float]] = []
    for i in range(n):
        start, end = lower.indptr[i], lower.indptr[i + 1]
        row: dict[int, float] = {}
        diagonal = 0.0
        for col, value in zip(lower.indices[start:end], lower.data[start:end]):
            col = int(col)
            if col < i:
                other = rows[col]
                dot = math.fsum(v * other[k] for k, v in row.items() if k in other)
                row[col] = (float(value) - dot) / other[col]
            elif col == i:
                diagonal = float(value)
        pivot = diagonal - math.fsum(v * v for v in row.values())
        if not (math.isfinite(pivot) and pivot > 0.0):
            raise FactorizationException(i, pivot)
        row[i] = math.sqrt(pivot)
        rows.append(row)

    indptr = np.zeros(n + 1, dtype=np.int64)
    indices: list[int] = []
    data: list[float] = []
    for i, row in enumerate(rows):
        for col in sorted(row):
            indices.append(col)
            data.append(row[col])
        indptr[i + 1] = len(indices)
    return csr_matrix((np.array(data), np.array(indices, dtype=np.int64), indptr), shape=(n, n))


class IncompleteCholeskyPreconditioner(IPreconditioner):
    """Applies (L L^T)^{-1} through two sparse triangular solves."""

    kind = PreconditionerKind.IC0

    def __init__(self, matrix: csr_matrix):
        self._lower = ic0_factorize(matrix)
        self._upper = self._lower.T.tocsr()

    def apply(self, residual: np.ndarray) -> np.ndarray:
        forward = spsolve_triangular(self._lower, residual, lower=True)
        return spsolve_triangular(self._upper, forward, lower=False)
