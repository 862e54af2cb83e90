"""Reference Y-graph geometry and branch point extraction from a density."""

import math

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from src.domain.entities import BranchExtractionSettings, BranchPoint, Triangulation
from src.domain.exceptions import DiagnosticsDomainException, EmptySupportException
from src.domain.services.forcing_assembler import TC3_SINKS, TC3_SOURCE

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
BRANCH_SEARCH_INTERVAL = (0.1, 0.9)


def gilbert_cost(c: float, q: float) -> float:
    """Cost of the symmetric Y-graph branching at (0.5, c).

    A unit mass travels up the trunk and splits in two halves.
    """
    trunk = c - TC3_SOURCE[1]
    arm = math.hypot(TC3_SINKS[1][0] - TC3_SOURCE[0], TC3_SINKS[1][1] - c)
    return trunk + 2.0 * 0.5**q * arm


def gilbert_branch_point(q: float, tol: float = 1e-8) -> float:
    """Height c(q) of the optimal branch point, by golden-section search."""
    if not 0.0 <= q <= 1.0:
        raise DiagnosticsDomainException(f"q must lie in [0, 1], got {q}")
    a, b = BRANCH_SEARCH_INTERVAL
    x1 = b - GOLDEN * (b - a)
    x2 = a + GOLDEN * (b - a)
    f1, f2 = gilbert_cost(x1, q), gilbert_cost(x2, q)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - GOLDEN * (b - a)
            f1 = gilbert_cost(x1, q)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + GOLDEN * (b - a)
            f2 = gilbert_cost(x2, q)
    return 0.5 * (a + b)


def reference_y_segments(q: float) -> np.ndarray:
    """Trunk and the two arms of the reference graph, shape (3, 2, 2)."""
    joint = (TC3_SOURCE[0], gilbert_branch_point(q))
    return np.array(
        [
            [TC3_SOURCE, joint],
            [joint, TC3_SINKS[0]],
            [joint, TC3_SINKS[1]],
        ],
        dtype=np.float64,
    )


def distance_to_segments(points, segments) -> np.ndarray:
    """Euclidean distance from each point to the nearest segment."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    segs = np.asarray(segments, dtype=np.float64)
    start = segs[:, 0, :]
    direction = segs[:, 1, :] - start
    length_sq = np.einsum("sk,sk->s", direction, direction)
    offset = pts[:, None, :] - start[None, :, :]
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.einsum("psk,sk->ps", offset, direction) / length_sq
    t = np.clip(np.nan_to_num(t, nan=0.0), 0.0, 1.0)
    nearest = start[None, :, :] + t[:, :, None] * direction[None, :, :]
    return np.linalg.norm(pts[:, None, :] - nearest, axis=2).min(axis=1)


def support_distance_to_graph(
    mu, mesh: Triangulation, q: float, threshold: float = 1e-10
) -> float:
    """Largest distance from a supported triangle centroid to the reference graph."""
    supported = np.asarray(mu) > threshold
    if not supported.any():
        raise EmptySupportException(threshold)
    distances = distance_to_segments(mesh.centroids[supported], reference_y_segments(q))
    return float(distances.max())


def triangle_adjacency(mesh: Triangulation) -> csr_matrix:
    """Triangles sharing at least one node, as a boolean sparse matrix."""
    rows = np.repeat(np.arange(mesh.num_triangles), 3)
    incidence = csr_matrix(
        (np.ones(rows.size), (rows, mesh.triangles.ravel())),
        shape=(mesh.num_triangles, mesh.num_nodes),
    )
    return (incidence @ incidence.T).astype(bool).tocsr()


def _lateral_split(x: np.ndarray, labels: np.ndarray, count: int, separation: float) -> bool:
    lo = np.full(count, np.inf)
    hi = np.full(count, -np.inf)
    np.minimum.at(lo, labels, x)
    np.maximum.at(hi, labels, x)
    order = np.argsort(lo)
    reach = np.maximum.accumulate(hi[order])
    gaps = lo[order][1:] - reach[:-1]
    return bool(np.any(gaps > separation))


def extract_branch_point(
    mu,
    mesh: Triangulation,
    threshold: float = 1e-10,
    settings: BranchExtractionSettings | None = None,
) -> BranchPoint | None:
    """Locate where a vertical trunk splits into laterally separated arms.

    Horizontal strips are swept upward from `settings.y_start`. Supported
    triangles of a strip are grouped by shared nodes; the first strip whose
    groups leave a horizontal gap wider than the separation yields the
    area-weighted centroid of its supported triangles. Returns None when no
    strip below `settings.y_stop` splits.
    """
    settings = settings or BranchExtractionSettings()
    mu = np.asarray(mu, dtype=np.float64)
    cutoff = max(threshold, settings.relative_threshold * float(mu.max()))
    supported = mu > cutoff
    h = mesh.h
    height = settings.strip_height_factor * h
    step = settings.strip_step_factor * h
    separation = settings.separation_factor * h
    adjacency = triangle_adjacency(mesh)
    centroids = mesh.centroids

    y_lo = settings.y_start
    while y_lo < settings.y_stop:
        in_strip = supported & (centroids[:, 1] >= y_lo) & (centroids[:, 1] < y_lo + height)
        members = np.flatnonzero(in_strip)
        if members.size >= 2:
            count, labels = connected_components(
                adjacency[members][:, members], directed=False
            )
            if count >= 2 and _lateral_split(centroids[members, 0], labels, count, separation):
                weights = mesh.areas[members]
                x, y = np.average(centroids[members], axis=0, weights=weights)
                return BranchPoint(x=float(x), y=float(y))
        y_lo += step
    return None
