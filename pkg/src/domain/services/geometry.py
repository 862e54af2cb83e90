"""Element geometry and point location on triangulations."""

import numpy as np
from scipy.spatial import cKDTree

from src.domain.entities import ElementGeometry, Triangulation

LOCATE_CANDIDATES = 16


def basis_gradients(mesh: Triangulation) -> np.ndarray:
    """Gradients of the three P1 barycentric functions on every triangle, shape (T, 3, 2).

    The gradient of the function attached to vertex i is the opposite edge
    rotated by +90 degrees divided by twice the signed area.
    """
    corners = mesh.nodes[mesh.triangles]
    opposite = np.roll(corners, -2, axis=1) - np.roll(corners, -1, axis=1)
    rotated = np.stack((-opposite[:, :, 1], opposite[:, :, 0]), axis=2)
    return rotated / (2.0 * mesh.signed_areas)[:, None, None]


def element_geometry(mesh: Triangulation, tri_index: int) -> ElementGeometry:
    if not 0 <= tri_index < mesh.num_triangles:
        raise IndexError(f"triangle index {tri_index} out of range [0, {mesh.num_triangles})")
    corners = mesh.nodes[mesh.triangles[tri_index]]
    d1 = corners[1] - corners[0]
    d2 = corners[2] - corners[0]
    area = 0.5 * abs(d1[0] * d2[1] - d1[1] * d2[0])
    opposite = np.roll(corners, -2, axis=0) - np.roll(corners, -1, axis=0)
    gradients = np.column_stack((-opposite[:, 1], opposite[:, 0])) / (2.0 * area)
    return ElementGeometry(area=area, basis_gradients=gradients)


def _barycentric(mesh: Triangulation, grads: np.ndarray, tri: np.ndarray, points: np.ndarray):
    offset = points - mesh.centroids[tri]
    return 1.0 / 3.0 + np.einsum("...ij,...j->...i", grads[tri], offset)


def locate_points(mesh: Triangulation, points, tol: float = 1e-12) -> np.ndarray:
    """Index of a triangle containing each point, -1 when the point is outside the mesh."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    grads = basis_gradients(mesh)
    located = np.full(len(pts), -1, dtype=np.int64)
    if len(pts) == 0:
        return located

    k = min(LOCATE_CANDIDATES, mesh.num_triangles)
    _, candidates = cKDTree(mesh.centroids).query(pts, k=k)
    candidates = np.asarray(candidates).reshape(len(pts), k)
    lam = _barycentric(mesh, grads, candidates, pts[:, None, :])
    inside = np.all(lam >= -tol, axis=2)
    hit = inside.any(axis=1)
    located[hit] = candidates[hit, inside[hit].argmax(axis=1)]

    all_tri = np.arange(mesh.num_triangles)
    for i in np.flatnonzero(~hit):
        lam_all = _barycentric(mesh, grads, all_tri, pts[i][None, :])
        inside_all = np.flatnonzero(np.all(lam_all >= -tol, axis=1))
        if inside_all.size:
            located[i] = inside_all[0]
    return located
