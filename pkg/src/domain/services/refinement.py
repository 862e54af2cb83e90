"""Uniform red refinement of triangulations."""

import numpy as np

from src.domain.entities import RefinedPair, Triangulation
from src.domain.entities.mesh import signed_areas_of
from src.domain.exceptions import MeshGeometryException


def refine_uniform(mesh: Triangulation) -> RefinedPair:
    """Split every triangle into four through its edge midpoints.

    Fine nodes are the coarse nodes followed by one midpoint per coarse edge,
    in the lexicographic order of the (min, max) edge keys. Children of
    triangle (v0, v1, v2) are the three corner triangles, in vertex order,
    then the central one; all keep counterclockwise orientation.
    """
    areas = signed_areas_of(mesh.nodes, mesh.triangles)
    if np.any(areas <= 0.0):
        raise MeshGeometryException("cannot refine a mesh with degenerate or clockwise triangles")

    n_coarse = mesh.num_nodes
    edges = mesh.edges
    midpoints = 0.5 * (mesh.nodes[edges[:, 0]] + mesh.nodes[edges[:, 1]])
    fine_nodes = np.vstack((mesh.nodes, midpoints))

    v0, v1, v2 = mesh.triangles.T
    m01, m12, m20 = (n_coarse + mesh.triangle_edges).T
    children = np.stack(
        (
            np.column_stack((v0, m01, m20)),
            np.column_stack((m01, v1, m12)),
            np.column_stack((m20, m12, v2)),
            np.column_stack((m01, m12, m20)),
        ),
        axis=1,
    ).reshape(-1, 3)

    boundary = mesh.boundary_edges
    boundary_keys = boundary.min(axis=1) * n_coarse + boundary.max(axis=1)
    edge_lookup = edges[:, 0] * n_coarse + edges[:, 1]
    boundary_mid = n_coarse + np.searchsorted(edge_lookup, boundary_keys)
    fine_boundary = np.stack(
        (
            np.column_stack((boundary[:, 0], boundary_mid)),
            np.column_stack((boundary_mid, boundary[:, 1])),
        ),
        axis=1,
    ).reshape(-1, 2)

    fine = Triangulation(nodes=fine_nodes, triangles=children, boundary_edges=fine_boundary)
    return RefinedPair(
        coarse=mesh,
        fine=fine,
        parent_of=np.repeat(np.arange(mesh.num_triangles), 4),
        coarse_node_embed=np.arange(n_coarse),
    )
