"""Domain exceptions module."""

from src.domain.exceptions.base import DomainException
from src.domain.exceptions.mesh_exceptions import (
    MeshGeometryException,
    MeshConfigurationException,
    MeshParseException,
)
from src.domain.exceptions.forcing_exceptions import (
    ForcingBalanceException,
    ForcingDomainException,
)
from src.domain.exceptions.assembly_exceptions import AssemblyException
from src.domain.exceptions.solver_exceptions import (
    SolverNonConvergenceException,
    SolverBreakdownException,
    FactorizationException,
)
from src.domain.exceptions.dynamics_exceptions import PositivityException
from src.domain.exceptions.diagnostics_exceptions import (
    DiagnosticsDomainException,
    QuadratureException,
    EmptySupportException,
)
from src.domain.exceptions.config_exceptions import ConfigException

__all__ = [
    "DomainException",
    "MeshGeometryException",
    "MeshConfigurationException",
    "MeshParseException",
    "ForcingBalanceException",
    "ForcingDomainException",
    "AssemblyException",
    "SolverNonConvergenceException",
    "SolverBreakdownException",
    "FactorizationException",
    "PositivityException",
    "DiagnosticsDomainException",
    "QuadratureException",
    "EmptySupportException",
    "ConfigException",
]
