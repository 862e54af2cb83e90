"""Run output repository interface."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Sequence

import numpy as np
from result import Result

from src.domain.entities import DiagnosticsRecord, Triangulation


class IOutputRepository(ABC):
    """Abstract interface for persisting fields, records and summaries."""

    @abstractmethod
    def write_cell_field(
        self, mesh: Triangulation, values: np.ndarray, name: str, path: Path
    ) -> Result:
        """Write a per-triangle field."""
        raise NotImplementedError

    @abstractmethod
    def write_point_field(
        self, mesh: Triangulation, values: np.ndarray, name: str, path: Path
    ) -> Result:
        """Write a per-node field."""
        raise NotImplementedError

    @abstractmethod
    def write_records(self, records: Sequence[DiagnosticsRecord], path: Path) -> Result:
        """Write per-step diagnostics records."""
        raise NotImplementedError

    @abstractmethod
    def write_document(self, document: dict[str, Any], path: Path) -> Result:
        """Write a structured document (summary, resolved configuration)."""
        raise NotImplementedError
