"""Triangulation entities."""

from functools import cached_property

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from src.domain.exceptions import MeshGeometryException

AREA_PARTITION_RTOL = 1e-12


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def edge_keys(triangles: np.ndarray, num_nodes: int) -> np.ndarray:
    """Canonical (min, max) key of every triangle edge, shape (T, 3).

    Local edge k joins vertices k and k+1 (mod 3).
    """
    pairs = triangles[:, [[0, 1], [1, 2], [2, 0]]].astype(np.int64)
    low = pairs.min(axis=2)
    high = pairs.max(axis=2)
    return low * np.int64(num_nodes) + high


def signed_areas_of(nodes: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    p0 = nodes[triangles[:, 0]]
    p1 = nodes[triangles[:, 1]]
    p2 = nodes[triangles[:, 2]]
    d1 = p1 - p0
    d2 = p2 - p0
    return 0.5 * (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])


class Triangulation(BaseModel):
    """Planar triangulation with counterclockwise triangles.

    Immutable after construction: arrays are flagged read-only and all
    derived quantities are cached.
    """

    nodes: np.ndarray
    triangles: np.ndarray
    boundary_edges: np.ndarray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("nodes", mode="before")
    @classmethod
    def _coerce_nodes(cls, value) -> np.ndarray:
        nodes = np.array(value, dtype=np.float64)
        if nodes.ndim != 2 or nodes.shape[1] != 2:
            raise MeshGeometryException(f"nodes must have shape (N, 2), got {nodes.shape}")
        return _readonly(nodes)

    @field_validator("triangles", mode="before")
    @classmethod
    def _coerce_triangles(cls, value) -> np.ndarray:
        triangles = np.array(value, dtype=np.int64)
        if triangles.ndim != 2 or triangles.shape[1] != 3:
            raise MeshGeometryException(
                f"triangles must have shape (T, 3), got {triangles.shape}"
            )
        return _readonly(triangles)

    @field_validator("boundary_edges", mode="before")
    @classmethod
    def _coerce_boundary_edges(cls, value) -> np.ndarray:
        edges = np.array(value, dtype=np.int64).reshape(-1, 2)
        return _readonly(edges)

    @model_validator(mode="after")
    def _check_invariants(self) -> "Triangulation":
        num_nodes = len(self.nodes)
        if len(self.triangles) == 0:
            raise MeshGeometryException("triangulation has no triangles")
        if self.triangles.min() < 0 or self.triangles.max() >= num_nodes:
            raise MeshGeometryException("triangle references a node index out of range")
        if len(self.boundary_edges) and (
            self.boundary_edges.min() < 0 or self.boundary_edges.max() >= num_nodes
        ):
            raise MeshGeometryException("boundary edge references a node index out of range")

        areas = signed_areas_of(self.nodes, self.triangles)
        bad = np.flatnonzero(areas <= 0.0)
        if bad.size:
            raise MeshGeometryException(
                f"{bad.size} triangle(s) with nonpositive signed area, first at index {bad[0]}"
            )

        keys = edge_keys(self.triangles, num_nodes).ravel()
        unique, counts = np.unique(keys, return_counts=True)
        if counts.max() > 2:
            raise MeshGeometryException("an edge is shared by more than two triangles")
        expected = np.sort(unique[counts == 1])
        given_low = self.boundary_edges.min(axis=1) if len(self.boundary_edges) else np.empty(0)
        given_high = self.boundary_edges.max(axis=1) if len(self.boundary_edges) else np.empty(0)
        given = np.sort(given_low.astype(np.int64) * num_nodes + given_high.astype(np.int64))
        if not np.array_equal(expected, given):
            raise MeshGeometryException(
                "boundary_edges do not match the edges owned by exactly one triangle"
            )
        return self

    @classmethod
    def from_connectivity(cls, nodes, triangles) -> "Triangulation":
        """Build a triangulation deriving the boundary from the connectivity.

        Boundary edges keep the orientation of their owning triangle.
        """
        nodes_array = np.asarray(nodes, dtype=np.float64)
        triangles_array = np.asarray(triangles, dtype=np.int64)
        local = triangles_array[:, [[0, 1], [1, 2], [2, 0]]].reshape(-1, 2)
        keys = edge_keys(triangles_array, len(nodes_array)).ravel()
        unique, inverse, counts = np.unique(keys, return_inverse=True, return_counts=True)
        on_boundary = counts[inverse] == 1
        boundary = local[on_boundary]
        order = np.argsort(keys[on_boundary], kind="stable")
        return cls(nodes=nodes_array, triangles=triangles_array, boundary_edges=boundary[order])

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    @cached_property
    def _edge_table(self) -> tuple[np.ndarray, np.ndarray]:
        keys = edge_keys(self.triangles, self.num_nodes)
        unique, inverse = np.unique(keys.ravel(), return_inverse=True)
        edges = np.column_stack((unique // self.num_nodes, unique % self.num_nodes))
        return _readonly(edges), _readonly(inverse.reshape(-1, 3))

    @property
    def edges(self) -> np.ndarray:
        """Unique edges as sorted (min, max) pairs in lexicographic order."""
        return self._edge_table[0]

    @property
    def triangle_edges(self) -> np.ndarray:
        """Index into `edges` of local edge k (vertices k, k+1) of each triangle."""
        return self._edge_table[1]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def signed_areas(self) -> np.ndarray:
        return _readonly(signed_areas_of(self.nodes, self.triangles))

    @property
    def areas(self) -> np.ndarray:
        return self.signed_areas

    @cached_property
    def centroids(self) -> np.ndarray:
        return _readonly(self.nodes[self.triangles].mean(axis=1))

    @cached_property
    def diameters(self) -> np.ndarray:
        corners = self.nodes[self.triangles]
        lengths = np.linalg.norm(corners - np.roll(corners, -1, axis=1), axis=2)
        return _readonly(lengths.max(axis=1))

    @property
    def h(self) -> float:
        """Mesh size: the largest triangle diameter."""
        return float(self.diameters.max())

    @property
    def total_area(self) -> float:
        return float(self.areas.sum())

    @property
    def euler_characteristic(self) -> int:
        return self.num_nodes - self.num_edges + self.num_triangles


class ElementGeometry(BaseModel):
    """Area and P1 basis gradients of a single triangle."""

    area: float
    basis_gradients: np.ndarray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "ElementGeometry":
        if self.area <= 0.0:
            raise MeshGeometryException(f"element area must be positive, got {self.area}")
        if self.basis_gradients.shape != (3, 2):
            raise MeshGeometryException("basis_gradients must have shape (3, 2)")
        return self


class RefinedPair(BaseModel):
    """A coarse triangulation and its uniform refinement.

    `parent_of[t]` is the coarse triangle containing fine triangle t and
    `coarse_node_embed[n]` the fine index of coarse node n.
    """

    coarse: Triangulation
    fine: Triangulation
    parent_of: np.ndarray
    coarse_node_embed: np.ndarray

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @field_validator("parent_of", "coarse_node_embed", mode="before")
    @classmethod
    def _coerce_index(cls, value) -> np.ndarray:
        return _readonly(np.array(value, dtype=np.int64))

    @model_validator(mode="after")
    def _check_invariants(self) -> "RefinedPair":
        n_coarse = self.coarse.num_triangles
        if self.fine.num_triangles != 4 * n_coarse or len(self.parent_of) != 4 * n_coarse:
            raise MeshGeometryException("each coarse triangle must have exactly 4 children")
        if not np.all(np.bincount(self.parent_of, minlength=n_coarse) == 4):
            raise MeshGeometryException("parent map does not give 4 children per triangle")
        if self.fine.num_nodes != self.coarse.num_nodes + self.coarse.num_edges:
            raise MeshGeometryException("fine node count must equal coarse nodes + coarse edges")
        if len(self.coarse_node_embed) != self.coarse.num_nodes:
            raise MeshGeometryException("coarse_node_embed must cover every coarse node")
        child_area = np.bincount(self.parent_of, weights=self.fine.areas, minlength=n_coarse)
        mismatch = np.abs(child_area - self.coarse.areas) / self.coarse.areas
        if mismatch.max() > AREA_PARTITION_RTOL:
            raise MeshGeometryException(
                f"children do not partition their parent (relative mismatch {mismatch.max():.2e})"
            )
        return self

    @property
    def h(self) -> float:
        return self.coarse.h
