"""Initial conductivities, projected onto piecewise constants on the coarse mesh.

Each triangle gets the mean of the profile over the centroids of its four
midpoint-refinement children. The children have equal areas, so this is the
P0 projection under a four-point quadrature; constant profiles are exact and
triangles cut by a jump get a weighted mean of both sides.
"""

import numpy as np

from src.domain.entities import (
    CheckerboardIC,
    InitialCondition,
    RadialDipIC,
    Triangulation,
    UniformIC,
    YTubeIC,
)
from src.domain.services.branch_point import distance_to_segments, reference_y_segments

DIP_MIN = 0.01
CHECKER_MID = 0.505
CHECKER_AMPLITUDE = 0.495


def child_centroids(mesh: Triangulation) -> np.ndarray:
    """Centroids of the four children of every triangle, shape (4, T, 2)."""
    a, b, c = (mesh.nodes[mesh.triangles[:, k]] for k in range(3))
    return np.stack(
        (
            (4.0 * a + b + c) / 6.0,
            (a + 4.0 * b + c) / 6.0,
            (a + b + 4.0 * c) / 6.0,
            (a + b + c) / 3.0,
        )
    )


def _profile(ic: InitialCondition, mesh: Triangulation, x: np.ndarray) -> np.ndarray:
    """Pointwise initial density at points x of shape (N, 2)."""
    if isinstance(ic, RadialDipIC):
        center = ic.center
        if center is None:
            center = 0.5 * (mesh.nodes.min(axis=0) + mesh.nodes.max(axis=0))
        distance = np.linalg.norm(x - np.asarray(center), axis=1)
        return DIP_MIN + (1.0 - DIP_MIN) * np.minimum(1.0, 2.0 * distance)
    if isinstance(ic, CheckerboardIC):
        wave = np.sin(2.0 * np.pi * ic.n * x[:, 0]) * np.sin(2.0 * np.pi * ic.n * x[:, 1])
        return CHECKER_MID + CHECKER_AMPLITUDE * np.sign(wave)
    if isinstance(ic, YTubeIC):
        distance = distance_to_segments(x, reference_y_segments(ic.q))
        return np.where(distance <= ic.rho, 1.0, ic.lo)
    raise TypeError(f"unsupported initial condition {type(ic).__name__}")


def initial_conductivity(ic: InitialCondition, mesh: Triangulation) -> np.ndarray:
    if isinstance(ic, UniformIC):
        return np.full(mesh.num_triangles, ic.value)
    points = child_centroids(mesh)
    values = _profile(ic, mesh, points.reshape(-1, 2))
    return values.reshape(4, mesh.num_triangles).mean(axis=0)
