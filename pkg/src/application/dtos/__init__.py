"""Application DTOs module."""

from .scenario_dtos import (
    ScenarioConfig,
    ScenarioSection,
    MeshSection,
    DynamicsSection,
    ForcingSection,
    DiagnosticsSection,
)
from .summary_dtos import CheckResult, LevelSummary, RunSummary, SweepRow, SweepSummary

__all__ = [
    "ScenarioConfig",
    "ScenarioSection",
    "MeshSection",
    "DynamicsSection",
    "ForcingSection",
    "DiagnosticsSection",
    "CheckResult",
    "LevelSummary",
    "RunSummary",
    "SweepRow",
    "SweepSummary",
]
