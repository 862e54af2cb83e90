"""Scenario configuration as read from a TOML file."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.domain.entities import (
    Box,
    BoxesForcing,
    BranchExtractionSettings,
    DiracForcing,
    ExactRadial,
    ForcingSpec,
    InitialCondition,
    PointSource,
    RadialForcing,
    SimConfig,
    SolverSettings,
    UniformIC,
)
from src.domain.services import make_tc1_boxes, make_tc2_sources, make_tc3_sources

ScenarioName = Literal["radial", "tc1", "tc2", "tc3", "custom"]


class StrictSection(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ScenarioSection(StrictSection):
    name: ScenarioName
    output_dir: str | None = None
    levels: int = Field(default=1, ge=1, description="Number of nested refinement levels.")


class MeshSection(StrictSection):
    """Either a generator with its parameters or a .node/.ele file pair."""

    generator: Literal["unit_square", "disk_polar"] | None = None
    n: int = Field(default=32, ge=1)
    n_r: int = Field(default=12, ge=1)
    n_t: int = Field(default=96, ge=8)
    node_file: str | None = None
    ele_file: str | None = None

    @model_validator(mode="after")
    def _one_source(self) -> "MeshSection":
        files = (self.node_file is not None, self.ele_file is not None)
        if files[0] != files[1]:
            raise ValueError("node_file and ele_file must be given together")
        if self.generator is not None and files[0]:
            raise ValueError("give either a generator or mesh files, not both")
        return self

    @property
    def from_files(self) -> bool:
        return self.node_file is not None


class DynamicsSection(StrictSection):
    beta: float = Field(gt=0.0)
    dt_initial: float = Field(default=0.01, gt=0.0)
    dt_max: float = Field(default=1.0, gt=0.0)
    growth_cap: float = Field(default=0.2, gt=0.0, le=1.0)
    tau_t: float = Field(default=5e-7, gt=0.0)
    max_steps: int = Field(default=5000, ge=1)
    mu_floor: float = Field(default=1e-10, ge=0.0)
    clamp_enabled: bool = True
    fixed_dt: float | None = Field(default=None, gt=0.0)
    record_stride: int | None = Field(default=None, ge=1)
    support_threshold: float = Field(default=1e-10, ge=0.0)


class ForcingSection(StrictSection):
    c1: float = 1.0
    c2: float | None = None
    box_value: float = Field(default=1.0, gt=0.0)
    seed: int | None = Field(default=None, ge=0)
    count: int = Field(default=50, ge=1)
    boxes: list[Box] | None = None
    sources: list[PointSource] | None = None


class DiagnosticsSection(BranchExtractionSettings):
    extract_branch_point: bool | None = None
    reference_q: float = Field(default=0.0, ge=0.0, le=1.0)

    model_config = ConfigDict(extra="forbid", frozen=False)

    def extraction_settings(self) -> BranchExtractionSettings:
        return BranchExtractionSettings(
            **self.model_dump(include=set(BranchExtractionSettings.model_fields))
        )


class ScenarioConfig(StrictSection):
    """A complete scenario; defaults depend on the scenario name."""

    scenario: ScenarioSection
    mesh: MeshSection = Field(default_factory=MeshSection)
    dynamics: DynamicsSection
    solver: SolverSettings = Field(default_factory=SolverSettings)
    initial_condition: InitialCondition = Field(default_factory=UniformIC)
    forcing: ForcingSection = Field(default_factory=ForcingSection)
    diagnostics: DiagnosticsSection = Field(default_factory=DiagnosticsSection)

    @model_validator(mode="after")
    def _resolve_defaults(self) -> "ScenarioConfig":
        name = self.scenario.name
        if self.mesh.generator is None and not self.mesh.from_files:
            generator = "disk_polar" if name == "radial" else "unit_square"
            self.mesh = self.mesh.model_copy(update={"generator": generator})
        if self.dynamics.record_stride is None:
            stride = 1 if name == "radial" else 10
            self.dynamics = self.dynamics.model_copy(update={"record_stride": stride})
        if self.diagnostics.extract_branch_point is None:
            self.diagnostics = self.diagnostics.model_copy(
                update={"extract_branch_point": name == "tc3"}
            )
        if name == "radial" and self.forcing.c2 is not None:
            c1, c2 = self.forcing.c1, self.forcing.c2
            if abs(c2 + c1 / 5.0) > 1e-12 * max(abs(c1), 1.0):
                raise ValueError(
                    f"forcing.c2 = {c2} must equal -c1/5 = {-c1 / 5.0} "
                    "for a balanced radial source"
                )
        if name == "custom":
            given = (self.forcing.boxes is not None, self.forcing.sources is not None)
            if given[0] == given[1]:
                raise ValueError(
                    "custom scenarios need exactly one of forcing.boxes or forcing.sources"
                )
        return self

    def sim_config(self) -> SimConfig:
        return SimConfig(
            **self.dynamics.model_dump(),
            solver=self.solver,
            ic=self.initial_condition,
        )

    def forcing_spec(self) -> ForcingSpec:
        name = self.scenario.name
        forcing = self.forcing
        if name == "radial":
            return RadialForcing(c1=forcing.c1, c2=forcing.c2)
        if name == "tc1":
            return make_tc1_boxes(forcing.box_value)
        if name == "tc2":
            return make_tc2_sources(forcing.seed or 0, forcing.count)
        if name == "tc3":
            return make_tc3_sources()
        if forcing.boxes is not None:
            return BoxesForcing(boxes=forcing.boxes)
        return DiracForcing(sources=forcing.sources)

    def exact_solution(self) -> ExactRadial | None:
        """Closed-form optimum for the radial scenario with beta <= 1."""
        if self.scenario.name != "radial" or self.dynamics.beta > 1.0:
            return None
        return ExactRadial(c1=self.forcing.c1, c2=self.forcing.c2, beta=self.dynamics.beta)

    def with_overrides(self, **sections) -> "ScenarioConfig":
        """Copy with some section fields replaced, re-validated."""
        data = self.model_dump(mode="json")
        for section, values in sections.items():
            data[section] = {**data[section], **values}
        return ScenarioConfig.model_validate(data)

    def with_initial_condition(self, initial_condition: dict) -> "ScenarioConfig":
        data = self.model_dump(mode="json")
        data["initial_condition"] = initial_condition
        return ScenarioConfig.model_validate(data)
