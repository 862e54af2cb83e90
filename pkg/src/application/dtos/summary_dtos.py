"""Run and sweep summaries written next to the run outputs."""

from typing import Any, Literal

from pydantic import BaseModel, Field

from src.domain.entities import BranchPoint


class LevelSummary(BaseModel):
    """Outcome of one refinement level."""

    level: int
    status: Literal["ok", "failed"] = "ok"
    error: str | None = None
    h: float | None = None
    coarse_triangles: int | None = None
    fine_nodes: int | None = None
    converged: bool = False
    steps: int = 0
    final_time: float | None = None
    final_var: float | None = None
    lyapunov: float | None = None
    energy: float | None = None
    mass_term: float | None = None
    err: float | None = None
    optimal_lyapunov: float | None = None
    steady_residual: float | None = None
    support_fraction: float | None = None
    support_triangles: int | None = None
    branch_point: BranchPoint | None = None
    support_connects_boxes: bool | None = None
    support_distance_to_graph: float | None = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "ok"


class RunSummary(BaseModel):
    """Everything a run reports, together with the resolved configuration."""

    scenario: str
    beta: float
    levels: list[LevelSummary] = Field(default_factory=list)
    err_rate: float | None = Field(
        default=None, description="Least squares slope of log err against log h."
    )
    reference_branch_y: float | None = None
    branch_extraction: dict[str, Any] | None = None
    wall_time: float = 0.0
    config: dict[str, Any] = Field(default_factory=dict)

    @property
    def finest(self) -> LevelSummary | None:
        done = [level for level in self.levels if level.ok]
        return done[-1] if done else None

    @property
    def failed(self) -> bool:
        return any(not level.ok for level in self.levels)


class SweepRow(BaseModel):
    label: str
    beta: float
    initial_condition: str
    converged: bool
    lyapunov: float | None = None
    support_fraction: float | None = None
    branch_y: float | None = None
    err: float | None = None
    error: str | None = None


class SweepSummary(BaseModel):
    parameter: Literal["beta", "initial_condition"]
    scenario: str
    rows: list[SweepRow] = Field(default_factory=list)

    def table(self) -> str:
        """Plain-text table of the sweep, one row per run."""
        header = (
            f"{'run':<16}{'beta':>8}{'converged':>11}"
            f"{'L_beta':>22}{'support':>12}{'branch y':>12}"
        )
        lines = [header]
        for row in self.rows:
            lyapunov = f"{row.lyapunov:.12g}" if row.lyapunov is not None else "-"
            support = f"{row.support_fraction:.4f}" if row.support_fraction is not None else "-"
            branch = f"{row.branch_y:.5f}" if row.branch_y is not None else "-"
            lines.append(
                f"{row.label:<16}{row.beta:>8.3g}{str(row.converged):>11}"
                f"{lyapunov:>22}{support:>12}{branch:>12}"
            )
        return "\n".join(lines)


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
