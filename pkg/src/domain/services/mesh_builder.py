"""Structured mesh generators for the unit square and the unit disk."""

import numpy as np

from src.domain.entities import Triangulation
from src.domain.exceptions import MeshConfigurationException


def gen_unit_square(n: int) -> Triangulation:
    """Unit square split into n x n cells, each cut along its rising diagonal.

    Node (i, j) has index j * (n + 1) + i; cell (i, j) yields the triangles
    below and above its diagonal, in that order.
    """
    if n < 1:
        raise MeshConfigurationException(f"unit square needs n >= 1, got {n}")
    coords = np.linspace(0.0, 1.0, n + 1)
    xx, yy = np.meshgrid(coords, coords)
    nodes = np.column_stack((xx.ravel(), yy.ravel()))

    ii, jj = np.meshgrid(np.arange(n), np.arange(n))
    a = (jj * (n + 1) + ii).ravel()
    b = a + 1
    c = a + n + 2
    d = a + n + 1
    lower = np.column_stack((a, b, c))
    upper = np.column_stack((a, c, d))
    triangles = np.stack((lower, upper), axis=1).reshape(-1, 3)
    return Triangulation.from_connectivity(nodes, triangles)


def gen_disk_polar(n_r: int, n_t: int) -> Triangulation:
    """Polar mesh of the unit disk centred at the origin.

    Rings sit at radii k / n_r, each carrying n_t equally spaced nodes, so
    with n_r a multiple of 3 the circles r = 1/3 and r = 2/3 are meshed
    exactly. The innermost ring is joined to the centre by a fan.
    """
    if n_r < 3 or n_r % 3 != 0:
        raise MeshConfigurationException(f"n_r must be a positive multiple of 3, got {n_r}")
    if n_t < 8:
        raise MeshConfigurationException(f"n_t must be at least 8, got {n_t}")

    theta = 2.0 * np.pi * np.arange(n_t) / n_t
    radii = np.arange(1, n_r + 1) / n_r
    ring_x = radii[:, None] * np.cos(theta)[None, :]
    ring_y = radii[:, None] * np.sin(theta)[None, :]
    nodes = np.vstack(([0.0, 0.0], np.column_stack((ring_x.ravel(), ring_y.ravel()))))

    def ring(k: int) -> np.ndarray:
        return 1 + (k - 1) * n_t + np.arange(n_t)

    first = ring(1)
    triangles = [np.column_stack((np.zeros(n_t, dtype=np.int64), first, np.roll(first, -1)))]
    for k in range(1, n_r):
        inner = ring(k)
        outer = ring(k + 1)
        inner_next = np.roll(inner, -1)
        outer_next = np.roll(outer, -1)
        triangles.append(np.column_stack((inner, outer, outer_next)))
        triangles.append(np.column_stack((inner, outer_next, inner_next)))
    return Triangulation.from_connectivity(nodes, np.vstack(triangles))
