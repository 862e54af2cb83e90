"""Mesh file repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path

from result import Result

from src.domain.entities import Triangulation


class IMeshRepository(ABC):
    """Abstract interface for reading and writing triangulation files."""

    @abstractmethod
    def read(self, node_path: Path, ele_path: Path) -> Triangulation:
        """Read a triangulation from a node/element file pair."""
        raise NotImplementedError

    @abstractmethod
    def write(self, mesh: Triangulation, node_path: Path, ele_path: Path) -> Result:
        """Write a triangulation to a node/element file pair."""
        raise NotImplementedError
