"""Linear solver settings and reports."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


# IC(0) is factorized in Python; Jacobi is rebuilt every step.
IC0_REFRESH_INTERVAL = 10


class PreconditionerKind(str, Enum):
    JACOBI = "jacobi"
    IC0 = "ic0"
    NONE = "none"


class SolverSettings(BaseModel):
    """PCG settings; `max_iter` None means 10 x number of unknowns."""

    preconditioner: PreconditionerKind = PreconditionerKind.JACOBI
    tol: float = Field(default=1e-11, gt=0.0)
    max_iter: int | None = Field(default=None, ge=1)
    refresh_interval: int | None = Field(
        default=None,
        ge=1,
        description="Rebuild the preconditioner every k time steps; None picks per kind.",
    )

    model_config = ConfigDict(extra="forbid", frozen=True)

    @property
    def effective_refresh_interval(self) -> int:
        if self.refresh_interval is not None:
            return self.refresh_interval
        return IC0_REFRESH_INTERVAL if self.preconditioner == PreconditionerKind.IC0 else 1


class SolveReport(BaseModel):
    iterations: int
    final_relative_residual: float
    preconditioner: PreconditionerKind

    model_config = ConfigDict(frozen=True)
