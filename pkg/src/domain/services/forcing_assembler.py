"""Load vector assembly for distributed and point sources."""

import math

import numpy as np
from scipy.spatial import cKDTree

from src.domain.entities import (
    Box,
    BoxesForcing,
    DiracForcing,
    ForcingSpec,
    PointSource,
    RadialForcing,
    RefinedPair,
    RhsVector,
    Triangulation,
)
from src.domain.exceptions import ForcingBalanceException, ForcingDomainException
from src.domain.services.geometry import locate_points

TC2_SOURCE_BOX = (0.1, 0.9)
TC2_SINK = (0.05, 0.05)
TC3_SOURCE = (0.5, 0.1)
TC3_SINKS = ((0.4, 0.9), (0.6, 0.9))


def _density_at(spec: BoxesForcing | RadialForcing, points: np.ndarray) -> np.ndarray:
    if isinstance(spec, BoxesForcing):
        density = np.zeros(len(points))
        for box in spec.boxes:
            inside = (
                (points[:, 0] >= box.x_min)
                & (points[:, 0] <= box.x_max)
                & (points[:, 1] >= box.y_min)
                & (points[:, 1] <= box.y_max)
            )
            density[inside] += box.value
        return density
    r = np.linalg.norm(points, axis=1)
    density = np.zeros(len(points))
    density[r < 1.0 / 3.0] = spec.c1
    density[r > 2.0 / 3.0] = spec.resolved_c2
    return density


def _distributed_loads(spec: BoxesForcing | RadialForcing, fine: Triangulation) -> np.ndarray:
    # one-point centroid rule, a third of the element mass to each vertex
    element_mass = _density_at(spec, fine.centroids) * fine.areas / 3.0
    return np.bincount(
        fine.triangles.ravel(), weights=np.repeat(element_mass, 3), minlength=fine.num_nodes
    )


def _dirac_loads(spec: DiracForcing, fine: Triangulation) -> np.ndarray:
    points = np.array([[s.x, s.y] for s in spec.sources])
    weights = np.array([s.weight for s in spec.sources])
    outside = np.flatnonzero(locate_points(fine, points) < 0)
    if outside.size:
        x, y = points[outside[0]]
        raise ForcingDomainException(f"point source at ({x}, {y}) lies outside the mesh")
    _, snapped = cKDTree(fine.nodes).query(points)
    loads = np.zeros(fine.num_nodes)
    np.add.at(loads, snapped, weights)
    return loads


def balance(loads: np.ndarray) -> RhsVector:
    """Scale the negative entries so the load vector sums to zero."""
    positive_total = math.fsum(loads[loads > 0.0])
    negative_total = -math.fsum(loads[loads < 0.0])
    if positive_total <= 0.0 or negative_total <= 0.0:
        raise ForcingBalanceException(
            f"need both sources and sinks (positive {positive_total:.3e}, "
            f"negative {negative_total:.3e})"
        )
    factor = positive_total / negative_total
    values = np.where(loads < 0.0, loads * factor, loads)
    return RhsVector(
        values=values,
        positive_total=positive_total,
        negative_total=negative_total * factor,
        balance_factor=factor,
    )


def assemble_rhs(spec: ForcingSpec, pair: RefinedPair) -> RhsVector:
    """Mass-balanced P1 load vector on the fine mesh of `pair`."""
    if isinstance(spec, DiracForcing):
        loads = _dirac_loads(spec, pair.fine)
    else:
        loads = _distributed_loads(spec, pair.fine)
    return balance(loads)


def make_tc1_boxes(value: float = 1.0) -> BoxesForcing:
    """Source on [1/8, 3/8] x [1/4, 3/4], sink of equal magnitude on [5/8, 7/8] x [1/4, 3/4]."""
    return BoxesForcing(
        boxes=[
            Box(x_min=0.125, x_max=0.375, y_min=0.25, y_max=0.75, value=value),
            Box(x_min=0.625, x_max=0.875, y_min=0.25, y_max=0.75, value=-value),
        ]
    )


def make_tc2_sources(seed: int, count: int = 50) -> DiracForcing:
    """`count` unit sources drawn uniformly on [0.1, 0.9]^2 and one balancing sink."""
    rng = np.random.default_rng(seed)
    low, high = TC2_SOURCE_BOX
    points = rng.uniform(low, high, size=(count, 2))
    sources = [PointSource(x=float(x), y=float(y), weight=1.0) for x, y in points]
    sources.append(PointSource(x=TC2_SINK[0], y=TC2_SINK[1], weight=-float(count)))
    return DiracForcing(sources=sources, seed=seed)


def make_tc3_sources() -> DiracForcing:
    """Unit source at (0.5, 0.1) feeding two half-weight sinks at y = 0.9."""
    sources = [PointSource(x=TC3_SOURCE[0], y=TC3_SOURCE[1], weight=1.0)]
    sources.extend(PointSource(x=x, y=y, weight=-0.5) for x, y in TC3_SINKS)
    return DiracForcing(sources=sources)
