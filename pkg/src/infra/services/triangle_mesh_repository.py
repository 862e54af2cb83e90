"""Triangle-format (.node / .ele) mesh files."""

from pathlib import Path

import numpy as np
from result import Err, Ok, Result

from src.domain.entities import Triangulation
from src.domain.exceptions import MeshParseException
from src.domain.repositories import IMeshRepository
from src.infra.config.logger import ILogger


def _data_lines(path: Path) -> list[tuple[int, list[str]]]:
    """Non-empty lines with comments stripped, paired with 1-based line numbers."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MeshParseException(path, 0, f"cannot read file: {e}")
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            rows.append((number, tokens))
    return rows


def _parse_header(path: Path, rows, minimum: int, expected: dict[int, int]) -> int:
    if not rows:
        raise MeshParseException(path, 0, "file has no header")
    number, tokens = rows[0]
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise MeshParseException(path, number, "header must contain integers")
    if len(values) < minimum:
        raise MeshParseException(path, number, f"header needs at least {minimum} fields")
    for position, value in expected.items():
        if position < len(values) and values[position] != value:
            raise MeshParseException(
                path, number, f"header field {position + 1} must be {value}, got {values[position]}"
            )
    count = values[0]
    if count < 0 or len(rows) - 1 < count:
        raise MeshParseException(
            path, number, f"header announces {count} rows, file has {len(rows) - 1}"
        )
    return count


class TriangleMeshRepository(IMeshRepository):
    """Reads and writes 2D Triangle files.

    Both index bases are accepted on read; the base is taken from the
    first node row and applied to the element file.
    """

    def __init__(self, logger: ILogger):
        self.logger = logger.get_logger()

    def _read_nodes(self, path: Path) -> tuple[np.ndarray, int]:
        rows = _data_lines(path)
        count = _parse_header(path, rows, minimum=2, expected={1: 2})
        nodes = np.empty((count, 2))
        base = None
        for position, (number, tokens) in enumerate(rows[1 : count + 1]):
            if len(tokens) < 3:
                raise MeshParseException(
                    path, number, "node row needs an index and two coordinates"
                )
            try:
                index = int(tokens[0])
                x, y = float(tokens[1]), float(tokens[2])
            except ValueError:
                raise MeshParseException(path, number, "malformed node row")
            if base is None:
                if index not in (0, 1):
                    raise MeshParseException(path, number, "first node index must be 0 or 1")
                base = index
            if index != position + base:
                raise MeshParseException(
                    path, number, f"expected node index {position + base}, got {index}"
                )
            nodes[position] = (x, y)
        return nodes, base if base is not None else 0

    def _read_elements(self, path: Path, num_nodes: int, base: int) -> np.ndarray:
        rows = _data_lines(path)
        count = _parse_header(path, rows, minimum=2, expected={1: 3})
        triangles = np.empty((count, 3), dtype=np.int64)
        for position, (number, tokens) in enumerate(rows[1 : count + 1]):
            if len(tokens) < 4:
                raise MeshParseException(path, number, "element row needs an index and three nodes")
            try:
                corners = [int(t) - base for t in tokens[1:4]]
            except ValueError:
                raise MeshParseException(path, number, "malformed element row")
            for corner in corners:
                if not 0 <= corner < num_nodes:
                    raise MeshParseException(
                        path, number, f"node {corner + base} is outside 0..{num_nodes - 1 + base}"
                    )
            triangles[position] = corners
        return triangles

    def read(self, node_path: Path, ele_path: Path) -> Triangulation:
        """Read a triangulation; the boundary is derived from the connectivity.

        Raises:
            MeshParseException: On malformed files, with the offending line.
            MeshGeometryException: If the mesh itself is invalid.
        """
        node_path, ele_path = Path(node_path), Path(ele_path)
        nodes, base = self._read_nodes(node_path)
        triangles = self._read_elements(ele_path, len(nodes), base)
        mesh = Triangulation.from_connectivity(nodes, triangles)
        self.logger.info(
            f"Read mesh {node_path.name}: {mesh.num_nodes} nodes, {mesh.num_triangles} triangles"
        )
        return mesh

    def write(self, mesh: Triangulation, node_path: Path, ele_path: Path) -> Result:
        """Write 1-based files, with a boundary marker per node."""
        node_path, ele_path = Path(node_path), Path(ele_path)
        on_boundary = np.zeros(mesh.num_nodes, dtype=np.int64)
        on_boundary[mesh.boundary_edges.ravel()] = 1
        node_lines = [f"{mesh.num_nodes} 2 0 1"]
        node_lines += [
            f"{i + 1} {x:.17g} {y:.17g} {marker}"
            for i, ((x, y), marker) in enumerate(zip(mesh.nodes, on_boundary))
        ]
        ele_lines = [f"{mesh.num_triangles} 3 0"]
        ele_lines += [
            f"{t + 1} {a + 1} {b + 1} {c + 1}" for t, (a, b, c) in enumerate(mesh.triangles)
        ]
        try:
            node_path.parent.mkdir(parents=True, exist_ok=True)
            node_path.write_text("\n".join(node_lines) + "\n", encoding="utf-8")
            ele_path.write_text("\n".join(ele_lines) + "\n", encoding="utf-8")
        except OSError as e:
            self.logger.error(f"Error writing mesh {node_path}: {e}")
            return Err(f"Failed to write mesh {node_path}: {e}")
        self.logger.debug(f"Wrote mesh {node_path} / {ele_path}")
        return Ok((node_path, ele_path))
