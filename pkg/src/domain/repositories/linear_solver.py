"""Linear solver interface."""

from abc import ABC, abstractmethod

import numpy as np
from scipy.sparse import csr_matrix

from src.domain.entities import PreconditionerKind, SolveReport


class IPreconditioner(ABC):
    """Approximate inverse of a symmetric positive (semi)definite matrix."""

    kind: PreconditionerKind

    @abstractmethod
    def apply(self, residual: np.ndarray) -> np.ndarray:
        """Return M^{-1} r."""
        raise NotImplementedError


class ILinearSolver(ABC):
    """Abstract interface for solving A x = b with a singular-consistent SPD A."""

    @abstractmethod
    def build_preconditioner(
        self, matrix: csr_matrix, kind: PreconditionerKind
    ) -> IPreconditioner:
        """Build a preconditioner for `matrix`, degrading to Jacobi when IC(0) fails."""
        raise NotImplementedError

    @abstractmethod
    def solve(
        self,
        matrix: csr_matrix,
        rhs: np.ndarray,
        x0: np.ndarray | None = None,
        tol: float = 1e-11,
        max_iter: int | None = None,
        preconditioner: IPreconditioner | PreconditionerKind = PreconditionerKind.JACOBI,
        project_null_space: bool = True,
    ) -> tuple[np.ndarray, SolveReport]:
        """Solve and return the (mean-zero when projecting) solution with its report."""
        raise NotImplementedError
