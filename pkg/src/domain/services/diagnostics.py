"""Lyapunov functional, steady-state checks and support statistics.

P0 integrals use one-point quadrature per coarse triangle; the energy uses
the exact elementwise P1 gradients collapsed to coarse RMS norms, so the
identity L = E_f + M_beta holds as computed.
"""

import math

import numpy as np
from scipy.sparse.csgraph import connected_components

from src.domain.entities import (
    Box,
    DiagnosticsRecord,
    ExactRadial,
    LyapunovValue,
    RefinedPair,
    SimState,
    Triangulation,
)
from src.domain.exceptions import DiagnosticsDomainException, EmptySupportException
from src.domain.services.branch_point import triangle_adjacency
from src.domain.services.fem_assembler import StiffnessAssembler
from src.domain.services.radial_solution import sample_exact_mu


def _positive(mu) -> np.ndarray:
    mu = np.asarray(mu, dtype=np.float64)
    if np.any(~np.isfinite(mu)) or np.any(mu <= 0.0):
        raise DiagnosticsDomainException("mu must be finite and strictly positive")
    return mu


def l2_norm(values, mesh: Triangulation) -> float:
    values = np.asarray(values, dtype=np.float64)
    return math.sqrt(float(np.sum(mesh.areas * values**2)))


def integral_mu(mu, mesh: Triangulation) -> float:
    return float(np.sum(mesh.areas * np.asarray(mu, dtype=np.float64)))


def mass_term(mu, beta: float, mesh: Triangulation) -> float:
    """M_beta; the logarithmic branch is taken at beta = 2."""
    mu = _positive(mu)
    if beta == 2.0:
        return 0.5 * float(np.sum(mesh.areas * np.log(mu)))
    exponent = (2.0 - beta) / beta
    return 0.5 * float(np.sum(mesh.areas * mu**exponent)) / exponent


def lyapunov_from_norms(mu, g, beta: float, mesh: Triangulation) -> LyapunovValue:
    mu = _positive(mu)
    energy = 0.5 * float(np.sum(mu * np.asarray(g) ** 2 * mesh.areas))
    mass = mass_term(mu, beta, mesh)
    return LyapunovValue(lyapunov=energy + mass, energy=energy, mass_term=mass)


def lyapunov(mu, u, beta: float, pair: RefinedPair) -> LyapunovValue:
    g = StiffnessAssembler(pair).gradient_norms(u)
    return lyapunov_from_norms(mu, g, beta, pair.coarse)


def lie_derivative_from_norms(mu, g, beta: float, mesh: Triangulation) -> float:
    mu = _positive(mu)
    g = np.asarray(g, dtype=np.float64)
    growth = g**beta - mu ** (1.0 - beta)
    slope = g**2 - mu ** (2.0 * (1.0 - beta) / beta)
    return -0.5 * float(np.sum(mesh.areas * mu**beta * growth * slope))


def lie_derivative_rhs(mu, u, beta: float, pair: RefinedPair) -> float:
    """Time derivative of L_beta along the dynamics; never positive."""
    g = StiffnessAssembler(pair).gradient_norms(u)
    return lie_derivative_from_norms(mu, g, beta, pair.coarse)


def err_metric(mu, exact: ExactRadial, mesh: Triangulation) -> float:
    """Relative L2 distance to the optimal density sampled at centroids."""
    reference = sample_exact_mu(exact, mesh)
    reference_norm = l2_norm(reference, mesh)
    if reference_norm == 0.0:
        raise DiagnosticsDomainException("exact density has zero norm")
    return l2_norm(np.asarray(mu) - reference, mesh) / reference_norm


def steady_target(g, beta: float) -> np.ndarray:
    """Stationary density g^(beta / (1 - beta))."""
    if beta == 1.0:
        raise DiagnosticsDomainException("stationary density is undefined at beta = 1")
    with np.errstate(divide="ignore"):
        return np.asarray(g, dtype=np.float64) ** (beta / (1.0 - beta))


def steady_residual_from_norms(mu, g, beta: float, support_threshold: float = 1e-10) -> float:
    mu = np.asarray(mu, dtype=np.float64)
    target = steady_target(g, beta)
    supported = mu > support_threshold
    if not supported.any():
        raise EmptySupportException(support_threshold)
    mu_s = mu[supported]
    target_s = target[supported]
    with np.errstate(invalid="ignore"):
        residual = np.abs(mu_s - target_s) / np.maximum(mu_s, target_s)
    return float(np.nan_to_num(residual, nan=1.0).max())


def steady_residual(
    mu, u, beta: float, pair: RefinedPair, support_threshold: float = 1e-10
) -> float:
    g = StiffnessAssembler(pair).gradient_norms(u)
    return steady_residual_from_norms(mu, g, beta, support_threshold)


def support_stats(mu, mesh: Triangulation, threshold: float = 1e-10) -> tuple[float, int]:
    """Area fraction and number of triangles with mu above the threshold."""
    supported = np.asarray(mu) > threshold
    fraction = float(np.sum(mesh.areas[supported])) / mesh.total_area
    return fraction, int(supported.sum())


def _inside_box(points: np.ndarray, box: Box) -> np.ndarray:
    return (
        (points[:, 0] >= box.x_min)
        & (points[:, 0] <= box.x_max)
        & (points[:, 1] >= box.y_min)
        & (points[:, 1] <= box.y_max)
    )


def support_connects(
    mu, mesh: Triangulation, boxes: list[Box], threshold: float = 1e-10
) -> bool:
    """Whether one node-connected component of the support meets every box."""
    supported = np.flatnonzero(np.asarray(mu) > threshold)
    if supported.size == 0:
        return False
    adjacency = triangle_adjacency(mesh)[supported][:, supported]
    _, labels = connected_components(adjacency, directed=False)
    centroids = mesh.centroids[supported]
    touching = [set(labels[_inside_box(centroids, box)]) for box in boxes]
    return bool(set.intersection(*touching)) if touching else False


class DiagnosticsEvaluator:
    """Builds the per-step record of a trajectory on a fixed refined pair."""

    def __init__(
        self,
        pair: RefinedPair,
        beta: float,
        support_threshold: float = 1e-10,
        exact: ExactRadial | None = None,
    ):
        self.pair = pair
        self.beta = beta
        self.support_threshold = support_threshold
        self.exact = exact

    def record(self, state: SimState, g: np.ndarray, cg_iterations: int) -> DiagnosticsRecord:
        coarse = self.pair.coarse
        value = lyapunov_from_norms(state.mu, g, self.beta, coarse)
        fraction, _ = support_stats(state.mu, coarse, self.support_threshold)
        err = err_metric(state.mu, self.exact, coarse) if self.exact is not None else None
        return DiagnosticsRecord(
            step=state.step,
            time=state.time,
            dt=state.dt,
            var=state.var,
            lyapunov=value.lyapunov,
            energy=value.energy,
            mass_term=value.mass_term,
            mu_integral=integral_mu(state.mu, coarse),
            err=err,
            cg_iterations=cg_iterations,
            mu_min=float(state.mu.min()),
            mu_max=float(state.mu.max()),
            support_fraction=fraction,
        )


def convergence_rate(h, errors) -> float:
    """Least squares slope of log(error) against log(h)."""
    h = np.asarray(h, dtype=np.float64)
    errors = np.asarray(errors, dtype=np.float64)
    if len(h) < 2 or len(h) != len(errors):
        raise DiagnosticsDomainException("a rate needs at least two (h, error) pairs")
    if np.any(h <= 0.0) or np.any(errors <= 0.0):
        raise DiagnosticsDomainException("h and errors must be positive to fit a rate")
    slope, _ = np.polyfit(np.log(h), np.log(errors), 1)
    return float(slope)
