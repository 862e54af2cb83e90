"""Legacy VTK, CSV and JSON writers for run outputs."""

import json
from pathlib import Path
from typing import Any, Sequence

import numpy as np
from result import Err, Ok, Result

from src.domain.entities import DiagnosticsRecord, Triangulation
from src.domain.repositories import IOutputRepository
from src.infra.config.logger import ILogger

CSV_HEADER = (
    "step,time,dt,var,lyapunov,energy,mass_term,mu_integral,err,"
    "cg_iters,mu_min,mu_max,support_fraction"
)
VTK_TRIANGLE = 5


def format_float(value: float | None) -> str:
    """17 significant digits; None becomes an empty field."""
    return "" if value is None else f"{float(value):.17g}"


def record_row(record: DiagnosticsRecord) -> str:
    fields = [
        str(record.step),
        format_float(record.time),
        format_float(record.dt),
        format_float(record.var),
        format_float(record.lyapunov),
        format_float(record.energy),
        format_float(record.mass_term),
        format_float(record.mu_integral),
        format_float(record.err),
        str(record.cg_iterations),
        format_float(record.mu_min),
        format_float(record.mu_max),
        format_float(record.support_fraction),
    ]
    return ",".join(fields)


def vtk_unstructured_grid(mesh: Triangulation, title: str) -> list[str]:
    """Header, points and triangle cells of a legacy ASCII VTK file."""
    lines = [
        "# vtk DataFile Version 3.0",
        title,
        "ASCII",
        "DATASET UNSTRUCTURED_GRID",
        f"POINTS {mesh.num_nodes} double",
    ]
    lines += [f"{x:.17g} {y:.17g} 0" for x, y in mesh.nodes]
    lines.append(f"CELLS {mesh.num_triangles} {4 * mesh.num_triangles}")
    lines += [f"3 {a} {b} {c}" for a, b, c in mesh.triangles]
    lines.append(f"CELL_TYPES {mesh.num_triangles}")
    lines += [str(VTK_TRIANGLE)] * mesh.num_triangles
    return lines


def vtk_scalars(name: str, values: np.ndarray) -> list[str]:
    lines = [f"SCALARS {name} double 1", "LOOKUP_TABLE default"]
    lines += [format_float(v) for v in values]
    return lines


class FileOutputRepository(IOutputRepository):
    """Writes run artefacts to the local filesystem.

    Every write returns Ok(path) or Err(message); nothing is raised for I/O
    failures so one unwritable file does not abort a sweep.
    """

    def __init__(self, logger: ILogger):
        self.logger = logger.get_logger()

    def _write_text(self, path: Path, lines: list[str]) -> Result:
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        except OSError as e:
            self.logger.error(f"Error writing {path}: {e}")
            return Err(f"Failed to write {path}: {e}")
        self.logger.debug(f"Wrote {path}")
        return Ok(path)

    def write_cell_field(
        self, mesh: Triangulation, values: np.ndarray, name: str, path: Path
    ) -> Result:
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (mesh.num_triangles,):
            return Err(
                f"cell field {name} has shape {values.shape}, "
                f"mesh has {mesh.num_triangles} triangles"
            )
        lines = vtk_unstructured_grid(mesh, name)
        lines.append(f"CELL_DATA {mesh.num_triangles}")
        lines += vtk_scalars(name, values)
        return self._write_text(path, lines)

    def write_point_field(
        self, mesh: Triangulation, values: np.ndarray, name: str, path: Path
    ) -> Result:
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (mesh.num_nodes,):
            return Err(
                f"point field {name} has shape {values.shape}, mesh has {mesh.num_nodes} nodes"
            )
        lines = vtk_unstructured_grid(mesh, name)
        lines.append(f"POINT_DATA {mesh.num_nodes}")
        lines += vtk_scalars(name, values)
        return self._write_text(path, lines)

    def write_records(self, records: Sequence[DiagnosticsRecord], path: Path) -> Result:
        lines = [CSV_HEADER] + [record_row(r) for r in records]
        return self._write_text(path, lines)

    def write_document(self, document: dict[str, Any], path: Path) -> Result:
        text = json.dumps(document, indent=2, sort_keys=False, default=str)
        return self._write_text(path, text.splitlines())
