"""Linear solver exceptions."""

from typing import TYPE_CHECKING

from src.domain.exceptions.base import DomainException

if TYPE_CHECKING:
    from src.domain.entities.solver import SolveReport


class SolverNonConvergenceException(DomainException):
    """Exception raised when PCG reaches max_iter without converging."""

    def __init__(self, report: "SolveReport"):
        self.report = report
        super().__init__(
            f"PCG did not converge: {report.iterations} iterations, "
            f"relative residual {report.final_relative_residual:.3e} "
            f"(preconditioner {report.preconditioner.value})"
        )


class SolverBreakdownException(DomainException):
    """Exception raised when a search direction has nonpositive curvature."""

    def __init__(self, message: str):
        super().__init__(f"PCG breakdown, loss of positivity: {message}")


class FactorizationException(DomainException):
    """Exception raised when the incomplete Cholesky factor does not exist."""

    def __init__(self, row: int, pivot: float):
        self.row = row
        self.pivot = pivot
        super().__init__(f"Incomplete Cholesky failed: pivot {pivot:.3e} at row {row}")
