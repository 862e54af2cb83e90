"""Infrastructure services module."""

from src.infra.services.pcg_solver import PCGSolver
from src.infra.services.preconditioners import (
    IdentityPreconditioner,
    JacobiPreconditioner,
    IncompleteCholeskyPreconditioner,
    ic0_factorize,
)
from src.infra.services.triangle_mesh_repository import TriangleMeshRepository
from src.infra.services.file_output_repository import FileOutputRepository
from src.infra.services.toml_scenario_loader import TomlScenarioLoader

__all__ = [
    "PCGSolver",
    "IdentityPreconditioner",
    "JacobiPreconditioner",
    "IncompleteCholeskyPreconditioner",
    "ic0_factorize",
    "TriangleMeshRepository",
    "FileOutputRepository",
    "TomlScenarioLoader",
]
