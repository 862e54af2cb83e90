"""Time-stepping configuration, state and per-step records."""

from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.entities.solver import SolveReport, SolverSettings

LYAPUNOV_IDENTITY_RTOL = 1e-12


class UniformIC(BaseModel):
    kind: Literal["uniform1"] = "uniform1"
    value: float = Field(default=1.0, gt=0.0)

    model_config = ConfigDict(extra="forbid", frozen=True)


class RadialDipIC(BaseModel):
    """0.01 at the centre rising linearly to 1 at distance 1/2.

    The centre defaults to the midpoint of the mesh bounding box.
    """

    kind: Literal["radial_dip"] = "radial_dip"
    center: tuple[float, float] | None = None

    model_config = ConfigDict(extra="forbid", frozen=True)


class CheckerboardIC(BaseModel):
    """Values 0.01 and 1 alternating on an n x n pattern per unit length."""

    kind: Literal["checkerboard"] = "checkerboard"
    n: int = Field(default=4, ge=1)

    model_config = ConfigDict(extra="forbid", frozen=True)


class YTubeIC(BaseModel):
    """1 within distance rho of the reference Y-graph for exponent q, lo elsewhere."""

    kind: Literal["y_tube"] = "y_tube"
    q: float = Field(default=0.0, ge=0.0, le=1.0)
    rho: float = Field(default=0.02, gt=0.0)
    lo: float = Field(default=1e-3, gt=0.0)

    model_config = ConfigDict(extra="forbid", frozen=True)


InitialCondition = Annotated[
    Union[UniformIC, RadialDipIC, CheckerboardIC, YTubeIC], Field(discriminator="kind")
]


class SimConfig(BaseModel):
    """Parameters of the forward Euler conductivity dynamics."""

    beta: float = Field(gt=0.0)
    dt_initial: float = Field(default=0.01, gt=0.0)
    dt_max: float = Field(default=1.0, gt=0.0)
    growth_cap: float = Field(default=0.2, gt=0.0, le=1.0)
    tau_t: float = Field(default=5e-7, gt=0.0)
    max_steps: int = Field(default=5000, ge=1)
    mu_floor: float = Field(default=1e-10, ge=0.0)
    clamp_enabled: bool = True
    fixed_dt: float | None = Field(default=None, gt=0.0)
    record_stride: int = Field(default=1, ge=1)
    support_threshold: float = Field(default=1e-10, ge=0.0)
    solver: SolverSettings = Field(default_factory=SolverSettings)
    ic: InitialCondition = Field(default_factory=UniformIC)

    model_config = ConfigDict(extra="forbid", frozen=True)


class SimState(BaseModel):
    """Conductivity and potential after `step` forward Euler steps.

    `u` is the potential solved for the conductivity of the previous step
    until the run is finalised, when it is refreshed for the final `mu`.
    """

    step: int = 0
    time: float = 0.0
    mu: np.ndarray
    u: np.ndarray
    dt: float
    var: float | None = None
    solve_report: SolveReport | None = None
    converged: bool = False

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class DiagnosticsRecord(BaseModel):
    step: int
    time: float
    dt: float
    var: float | None
    lyapunov: float
    energy: float
    mass_term: float
    mu_integral: float
    err: float | None = None
    cg_iterations: int
    mu_min: float
    mu_max: float
    support_fraction: float

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_identity(self) -> "DiagnosticsRecord":
        total = self.energy + self.mass_term
        scale = max(abs(self.lyapunov), abs(self.energy), abs(self.mass_term), 1e-300)
        if abs(self.lyapunov - total) > LYAPUNOV_IDENTITY_RTOL * scale:
            raise ValueError("lyapunov must equal energy + mass_term")
        return self
