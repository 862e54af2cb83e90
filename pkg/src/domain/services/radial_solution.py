"""Closed-form radial benchmark on the unit disk.

The source is c1 on r < 1/3, zero on 1/3 < r < 2/3 and c2 = -c1/5 on
r > 2/3. Z(r) is the radial flux, |Z|^beta the optimal transport density
and U the p-Poisson potential with p = (2 - beta) / (1 - beta).
"""

import math
from collections.abc import Callable

import numpy as np

from src.domain.entities import ExactRadial, Triangulation
from src.domain.exceptions import DiagnosticsDomainException, QuadratureException

RADIUS_TOL = 1e-12
BREAKPOINTS = (1.0 / 3.0, 2.0 / 3.0)
QUADRATURE_MAX_DEPTH = 60


def _check_radius(r) -> np.ndarray:
    radius = np.asarray(r, dtype=np.float64)
    if np.any(radius <= 0.0) or np.any(radius > 1.0 + RADIUS_TOL):
        raise DiagnosticsDomainException("radius must lie in (0, 1]")
    return radius


def exact_z(r, c1: float = 1.0, c2: float | None = None):
    """Z(r) = -(1/r) * integral_0^r t F(t) dt, piecewise in closed form."""
    c2 = -c1 / 5.0 if c2 is None else c2
    radius = _check_radius(r)
    inner = -c1 * radius / 2.0
    plateau = -c1 / (18.0 * radius)
    outer = -(c1 / 18.0 + c2 * (radius**2 - 4.0 / 9.0) / 2.0) / radius
    z = np.where(radius <= BREAKPOINTS[1], plateau, outer)
    z = np.where(radius <= BREAKPOINTS[0], inner, z)
    return float(z) if z.ndim == 0 else z


def exact_mu(r, beta: float, c1: float = 1.0, c2: float | None = None):
    return np.abs(exact_z(r, c1, c2)) ** beta


def centroid_radii(mesh: Triangulation) -> np.ndarray:
    return np.linalg.norm(mesh.centroids, axis=1)


def sample_exact_mu(exact: ExactRadial, mesh: Triangulation) -> np.ndarray:
    """Optimal density at the coarse triangle centroids."""
    return exact_mu(centroid_radii(mesh), exact.beta, exact.c1, exact.resolved_c2)


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = QUADRATURE_MAX_DEPTH,
) -> float:
    """Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.

    Intervals narrower than tol / 100 are accepted as they stand, which
    bounds the work spent at integrable endpoint singularities.

    Raises:
        QuadratureException: On non-finite integrand values or when
            max_depth bisections do not reach the tolerance.
    """
    if b <= a:
        return 0.0
    min_width = tol * 1e-2

    def evaluate(x: float) -> float:
        value = f(x)
        if not math.isfinite(value):
            raise QuadratureException(f"integrand is not finite at {x!r}")
        return value

    fa, fm, fb = evaluate(a), evaluate(0.5 * (a + b)), evaluate(b)
    stack = [(a, b, fa, fm, fb, (b - a) * (fa + 4.0 * fm + fb) / 6.0, tol, 0)]
    parts: list[float] = []
    while stack:
        lo, hi, f_lo, f_mid, f_hi, whole, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        f_left = evaluate(0.5 * (lo + mid))
        f_right = evaluate(0.5 * (mid + hi))
        left = (mid - lo) * (f_lo + 4.0 * f_left + f_mid) / 6.0
        right = (hi - mid) * (f_mid + 4.0 * f_right + f_hi) / 6.0
        delta = left + right - whole
        if abs(delta) <= 15.0 * eps or hi - lo <= min_width:
            parts.append(left + right + delta / 15.0)
            continue
        if depth >= max_depth:
            raise QuadratureException(
                f"no convergence on [{lo!r}, {hi!r}] after {max_depth} bisections"
            )
        stack.append((lo, mid, f_lo, f_left, f_mid, left, 0.5 * eps, depth + 1))
        stack.append((mid, hi, f_mid, f_right, f_hi, right, 0.5 * eps, depth + 1))
    return math.fsum(parts)


def exact_potential(
    r: float, beta: float, c1: float = 1.0, c2: float | None = None, tol: float = 1e-10
) -> float:
    """U(r) = -integral_r^1 sign(Z) |Z|^(1 - beta) dt, normalised by U(1) = 0.

    beta = 0 gives the radial Poisson solution.
    """
    if not 0.0 <= beta < 1.0:
        raise DiagnosticsDomainException(f"exact potential needs 0 <= beta < 1, got {beta}")
    r = float(_check_radius(r))
    exponent = 1.0 - beta

    def integrand(t: float) -> float:
        z = exact_z(t, c1, c2)
        return math.copysign(abs(z) ** exponent, z) if z != 0.0 else 0.0

    cuts = [r] + [x for x in BREAKPOINTS if r < x < 1.0] + [1.0]
    pieces = [
        adaptive_simpson(integrand, lo, hi, tol=tol / (len(cuts) - 1))
        for lo, hi in zip(cuts[:-1], cuts[1:])
    ]
    return -math.fsum(pieces)


def optimal_lyapunov(exact: ExactRadial, mesh: Triangulation) -> float:
    """Centroid quadrature of |Z|^(2 - beta) / (2 - beta), the optimal value of L_beta."""
    z = exact_z(centroid_radii(mesh), exact.c1, exact.resolved_c2)
    exponent = 2.0 - exact.beta
    return float(np.sum(mesh.areas * np.abs(z) ** exponent) / exponent)
