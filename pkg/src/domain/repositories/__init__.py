"""Domain repositories module."""

from src.domain.repositories.logger import ILogger
from src.domain.repositories.linear_solver import ILinearSolver, IPreconditioner
from src.domain.repositories.mesh_repository import IMeshRepository
from src.domain.repositories.output_repository import IOutputRepository

__all__ = ["ILogger", "ILinearSolver", "IPreconditioner", "IMeshRepository", "IOutputRepository"]
