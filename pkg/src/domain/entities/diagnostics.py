"""Diagnostic value objects."""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator


class LyapunovValue(BaseModel):
    lyapunov: float
    energy: float
    mass_term: float

    model_config = ConfigDict(frozen=True)


class ExactRadial(BaseModel):
    """Closed-form radial benchmark on the unit disk.

    beta = 0 is admitted only for potential checks (p = 2); beta = 1 gives
    p = inf with optimal density |Z|.
    """

    c1: float = 1.0
    c2: float | None = None
    beta: float = Field(ge=0.0, le=1.0)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_balance(self) -> "ExactRadial":
        if self.c2 is not None and abs(self.c2 + self.c1 / 5.0) > 1e-12 * max(abs(self.c1), 1.0):
            raise ValueError("c2 must equal -c1/5 for a balanced source on the unit disk")
        return self

    @property
    def resolved_c2(self) -> float:
        return self.c2 if self.c2 is not None else -self.c1 / 5.0

    @property
    def p(self) -> float:
        if self.beta == 1.0:
            return math.inf
        return (2.0 - self.beta) / (1.0 - self.beta)


class BranchPoint(BaseModel):
    x: float
    y: float

    model_config = ConfigDict(frozen=True)


class BranchExtractionSettings(BaseModel):
    """Strip sweep parameters, in multiples of the coarse mesh size h."""

    strip_height_factor: float = Field(default=1.0, gt=0.0)
    strip_step_factor: float = Field(default=0.25, gt=0.0)
    separation_factor: float = Field(default=1.0, gt=0.0)
    relative_threshold: float = Field(
        default=1e-3, ge=0.0, description="Support cutoff as a fraction of max mu."
    )
    y_start: float = 0.15
    y_stop: float = 0.88

    model_config = ConfigDict(extra="forbid", frozen=True)
