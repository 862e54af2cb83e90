"""Tests for VTK, CSV and JSON run outputs."""

import json

import numpy as np
import pytest

from src.domain.entities import DiagnosticsRecord
from src.infra.services import FileOutputRepository
from src.infra.services.file_output_repository import CSV_HEADER, format_float


@pytest.fixture
def repository(stub_logger):
    return FileOutputRepository(stub_logger)


def make_record(step: int, err: float | None = None) -> DiagnosticsRecord:
    return DiagnosticsRecord(
        step=step,
        time=0.1 * step,
        dt=0.1,
        var=None if step == 0 else 0.5,
        lyapunov=0.1 + 0.2,
        energy=0.1,
        mass_term=0.2,
        mu_integral=1.0,
        err=err,
        cg_iterations=12,
        mu_min=0.5,
        mu_max=2.0,
        support_fraction=1.0,
    )


class TestVtkOutput:
    """Tests for legacy VTK files."""

    def test_cell_field_layout(self, repository, tmp_path, two_triangle_square):
        """Test the unstructured grid sections for two triangles."""
        path = repository.write_cell_field(
            two_triangle_square, np.array([1.0, 2.0]), "mu", tmp_path / "mu.vtk"
        ).unwrap()
        lines = path.read_text().splitlines()
        assert lines[0] == "# vtk DataFile Version 3.0"
        assert lines[2] == "ASCII"
        assert lines[3] == "DATASET UNSTRUCTURED_GRID"
        assert lines[4] == "POINTS 4 double"
        assert lines[9] == "CELLS 2 8"
        assert lines[10] == "3 0 1 2"
        assert lines[12:15] == ["CELL_TYPES 2", "5", "5"]
        assert lines[15] == "CELL_DATA 2"
        assert lines[16] == "SCALARS mu double 1"
        assert lines[18:] == ["1", "2"]

    def test_byte_reproducible(self, repository, tmp_path, two_triangle_square):
        """Test that writing twice gives identical bytes."""
        values = np.array([0.1, 1.0 / 3.0])
        first = repository.write_cell_field(two_triangle_square, values, "mu", tmp_path / "a.vtk")
        second = repository.write_cell_field(two_triangle_square, values, "mu", tmp_path / "b.vtk")
        assert first.unwrap().read_bytes() == second.unwrap().read_bytes()

    def test_values_round_trip(self, repository, tmp_path, square_mesh, rng):
        """Test that 17 significant digits reproduce the doubles exactly."""
        values = rng.standard_normal(square_mesh.num_nodes)
        path = repository.write_point_field(square_mesh, values, "u", tmp_path / "u.vtk").unwrap()
        lines = path.read_text().splitlines()
        start = lines.index("LOOKUP_TABLE default") + 1
        parsed = np.array([float(v) for v in lines[start:]])
        assert np.array_equal(parsed, values)
        assert f"POINT_DATA {square_mesh.num_nodes}" in lines

    def test_size_mismatch(self, repository, tmp_path, two_triangle_square):
        """Test that a field of the wrong size is refused without writing."""
        result = repository.write_point_field(
            two_triangle_square, np.zeros(3), "u", tmp_path / "u.vtk"
        )
        assert result.is_err()
        assert not (tmp_path / "u.vtk").exists()


class TestCsvOutput:
    """Tests for diagnostics tables."""

    def test_header_only(self, repository, tmp_path):
        """Test that no records give just the header."""
        path = repository.write_records([], tmp_path / "d.csv").unwrap()
        assert path.read_text() == CSV_HEADER + "\n"

    def test_rows(self, repository, tmp_path):
        """Test column order, empty optional fields and exact floats."""
        path = repository.write_records(
            [make_record(0), make_record(1, err=0.25)], tmp_path / "d.csv"
        ).unwrap()
        header, first, second = path.read_text().splitlines()
        assert header.split(",")[0:2] == ["step", "time"]
        first_fields = first.split(",")
        assert first_fields[3] == ""
        assert first_fields[8] == ""
        assert float(first_fields[4]) == 0.1 + 0.2
        second_fields = second.split(",")
        assert second_fields[8] == "0.25"
        assert second_fields[9] == "12"

    def test_format_float(self):
        """Test the shortest exact rendering and the empty field."""
        assert format_float(None) == ""
        assert float(format_float(1.0 / 3.0)) == 1.0 / 3.0
        assert format_float(2.0) == "2"


class TestDocumentOutput:
    """Tests for JSON summaries."""

    def test_write_document(self, repository, tmp_path):
        """Test that documents are written as indented JSON."""
        path = repository.write_document(
            {"scenario": "tc1", "levels": [{"h": 0.5}]}, tmp_path / "s" / "summary.json"
        ).unwrap()
        assert json.loads(path.read_text()) == {"scenario": "tc1", "levels": [{"h": 0.5}]}

    def test_unwritable_path(self, repository, tmp_path):
        """Test that an I/O failure becomes an Err."""
        blocker = tmp_path / "file"
        blocker.write_text("x")
        result = repository.write_document({}, blocker / "summary.json")
        assert result.is_err()
