"""Domain entities module."""

from .mesh import Triangulation, RefinedPair, ElementGeometry
from .forcing import (
    Box,
    PointSource,
    BoxesForcing,
    RadialForcing,
    DiracForcing,
    ForcingSpec,
    RhsVector,
)
from .solver import PreconditionerKind, SolverSettings, SolveReport
from .simulation import (
    UniformIC,
    RadialDipIC,
    CheckerboardIC,
    YTubeIC,
    InitialCondition,
    SimConfig,
    SimState,
    DiagnosticsRecord,
)
from .diagnostics import LyapunovValue, ExactRadial, BranchPoint, BranchExtractionSettings

__all__ = [
    "Triangulation",
    "RefinedPair",
    "ElementGeometry",
    "Box",
    "PointSource",
    "BoxesForcing",
    "RadialForcing",
    "DiracForcing",
    "ForcingSpec",
    "RhsVector",
    "PreconditionerKind",
    "SolverSettings",
    "SolveReport",
    "UniformIC",
    "RadialDipIC",
    "CheckerboardIC",
    "YTubeIC",
    "InitialCondition",
    "SimConfig",
    "SimState",
    "DiagnosticsRecord",
    "LyapunovValue",
    "ExactRadial",
    "BranchPoint",
    "BranchExtractionSettings",
]
