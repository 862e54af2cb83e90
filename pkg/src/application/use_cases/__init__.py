"""Application use cases module."""

from .run_scenario_use_case import RunScenarioUseCase
from .sweep_use_cases import SweepBetaUseCase, SweepInitialConditionUseCase
from .self_check_use_case import SelfCheckUseCase

__all__ = [
    "RunScenarioUseCase",
    "SweepBetaUseCase",
    "SweepInitialConditionUseCase",
    "SelfCheckUseCase",
]
