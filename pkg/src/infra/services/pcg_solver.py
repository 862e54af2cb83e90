"""Preconditioned conjugate gradients for pure Neumann stiffness systems."""

import numpy as np
from scipy.sparse import csr_matrix

from src.domain.entities import PreconditionerKind, SolveReport
from src.domain.exceptions import (
    FactorizationException,
    SolverBreakdownException,
    SolverNonConvergenceException,
)
from src.domain.repositories import ILinearSolver, IPreconditioner
from src.infra.config.logger import ILogger
from src.infra.services.preconditioners import (
    IdentityPreconditioner,
    IncompleteCholeskyPreconditioner,
    JacobiPreconditioner,
)


def _mean_free(vector: np.ndarray) -> np.ndarray:
    return vector - vector.mean()


def _identity(vector: np.ndarray) -> np.ndarray:
    return vector


class PCGSolver(ILinearSolver):
    """PCG with the constant null space projected out of every iterate.

    Args:
        logger: Logger for the application.
    """

    def __init__(self, logger: ILogger):
        self.logger = logger.get_logger()

    def build_preconditioner(
        self, matrix: csr_matrix, kind: PreconditionerKind
    ) -> IPreconditioner:
        if kind == PreconditionerKind.NONE:
            return IdentityPreconditioner()
        if kind == PreconditionerKind.IC0:
            try:
                return IncompleteCholeskyPreconditioner(matrix)
            except FactorizationException as e:
                self.logger.warning(f"{e}; falling back to Jacobi")
        return JacobiPreconditioner(matrix)

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
        """Solve A x = b to ||A x - b|| <= tol ||b||.

        Args:
            matrix: Symmetric positive semidefinite matrix, constants in its kernel.
            rhs: Right hand side orthogonal to constants.
            x0: Warm start; its mean is discarded.
            tol: Relative residual tolerance.
            max_iter: Iteration cap, 10 x size when None.
            preconditioner: Prepared preconditioner or the kind to build.
            project_null_space: Keep residuals and iterates mean-zero.

        Returns:
            The solution and a SolveReport.

        Raises:
            SolverNonConvergenceException: If max_iter is exhausted.
            SolverBreakdownException: If a direction has nonpositive curvature.
        """
        b = np.asarray(rhs, dtype=np.float64)
        n = len(b)
        if isinstance(preconditioner, PreconditionerKind):
            preconditioner = self.build_preconditioner(matrix, preconditioner)
        kind = preconditioner.kind
        max_iter = max_iter if max_iter is not None else 10 * n
        project = _mean_free if project_null_space else _identity

        b_norm = float(np.linalg.norm(b))
        if b_norm == 0.0:
            return np.zeros(n), SolveReport(
                iterations=0, final_relative_residual=0.0, preconditioner=kind
            )

        x = project(np.array(x0, dtype=np.float64)) if x0 is not None else np.zeros(n)
        r = project(b - matrix @ x)
        z = project(preconditioner.apply(r))
        p = z.copy()
        rz = float(r @ z)
        residual = float(np.linalg.norm(r)) / b_norm
        iterations = 0

        while True:
            if residual <= tol:
                true_r = project(b - matrix @ x)
                residual = float(np.linalg.norm(true_r)) / b_norm
                if residual <= tol:
                    break
                # residual replacement: restart the recurrence from the true residual
                r = true_r
                z = project(preconditioner.apply(r))
                p = z.copy()
                rz = float(r @ z)
            if iterations >= max_iter:
                raise SolverNonConvergenceException(
                    SolveReport(
                        iterations=iterations,
                        final_relative_residual=residual,
                        preconditioner=kind,
                    )
                )
            ap = matrix @ p
            curvature = float(p @ ap)
            if not np.isfinite(curvature) or curvature <= 0.0:
                raise SolverBreakdownException(
                    f"p^T A p = {curvature:.3e} at iteration {iterations}"
                )
            alpha = rz / curvature
            x += alpha * p
            r = project(r - alpha * ap)
            iterations += 1
            residual = float(np.linalg.norm(r)) / b_norm
            z = project(preconditioner.apply(r))
            rz_next = float(r @ z)
            p = z + (rz_next / rz) * p
            rz = rz_next

        x = project(x)
        report = SolveReport(
            iterations=iterations, final_relative_residual=residual, preconditioner=kind
        )
        self.logger.debug(
            f"PCG converged in {iterations} iterations, residual {residual:.3e} ({kind.value})"
        )
        return x, report
