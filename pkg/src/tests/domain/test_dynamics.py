"""Tests for the forward Euler conductivity dynamics."""

import numpy as np
import pytest

from src.domain.entities import (
    CheckerboardIC,
    ExactRadial,
    PreconditionerKind,
    RadialDipIC,
    RadialForcing,
    RhsVector,
    SimConfig,
    SimState,
    SolverSettings,
    SolveReport,
    UniformIC,
)
from src.domain.exceptions import DiagnosticsDomainException, PositivityException
from src.domain.services import (
    TransportDynamics,
    assemble_rhs,
    convergence_rate,
    gen_disk_polar,
    optimal_lyapunov,
    refine_uniform,
    steady_residual,
    var_metric,
)
from src.domain.services.diagnostics import lie_derivative_from_norms, lyapunov_from_norms
from src.domain.services.dynamics import Evaluation


@pytest.fixture
def make_dynamics(solver, stub_logger):
    def build(pair, rhs, **config) -> TransportDynamics:
        return TransportDynamics(pair, rhs, SimConfig(**config), solver, stub_logger)

    return build


@pytest.fixture
def zero_rhs(square_pair):
    return RhsVector(
        values=np.zeros(square_pair.fine.num_nodes),
        positive_total=0.0,
        negative_total=0.0,
        balance_factor=1.0,
    )


class CountingSolver:
    """Delegates to a real solver and counts preconditioner builds."""

    def __init__(self, solver):
        self.solver = solver
        self.builds = 0

    def build_preconditioner(self, matrix, kind):
        self.builds += 1
        return self.solver.build_preconditioner(matrix, kind)

    def solve(self, *args, **kwargs):
        return self.solver.solve(*args, **kwargs)


def run_radial_levels(solver, logger, beta: float, levels: int = 3):
    """Converge the radial problem on nested polar meshes; one (h, state, records) per level."""
    coarse = gen_disk_polar(6, 48)
    results = []
    for _ in range(levels):
        pair = refine_uniform(coarse)
        dynamics = TransportDynamics(
            pair,
            assemble_rhs(RadialForcing(), pair),
            SimConfig(beta=beta),
            solver,
            logger,
            ExactRadial(beta=beta),
        )
        state, records = dynamics.run_to_steady()
        results.append((pair, state, records))
        coarse = pair.fine
    return results


@pytest.fixture(scope="module")
def sublinear_radial_levels(solver, stub_logger):
    return run_radial_levels(solver, stub_logger, beta=0.5)


def empty_report() -> SolveReport:
    return SolveReport(
        iterations=0, final_relative_residual=0.0, preconditioner=PreconditionerKind.JACOBI
    )


class TestVarMetric:
    """Tests for the relative rate of change."""

    def test_identical_densities(self, square_mesh):
        """Test var = 0 without change."""
        mu = np.ones(square_mesh.num_triangles)
        assert var_metric(mu, mu, 0.1, square_mesh) == 0.0

    def test_homogeneity(self, square_mesh, rng):
        """Test var((1 + dt) mu, mu, dt) = 1 and its scaling with dt."""
        mu = rng.uniform(0.5, 2.0, square_mesh.num_triangles)
        dt = 0.05
        assert var_metric((1.0 + dt) * mu, mu, dt, square_mesh) == pytest.approx(1.0, rel=1e-12)
        changed = 1.1 * mu
        assert var_metric(changed, mu, 0.2, square_mesh) == pytest.approx(
            0.5 * var_metric(changed, mu, 0.1, square_mesh), rel=1e-12
        )

    def test_rejects_nonpositive_dt(self, square_mesh):
        """Test that dt must be positive."""
        mu = np.ones(square_mesh.num_triangles)
        with pytest.raises(DiagnosticsDomainException):
            var_metric(mu, mu, 0.0, square_mesh)


class TestEulerStep:
    """Tests for a single forward Euler update."""

    def test_update_formula(self, make_dynamics, square_pair, tc1_rhs):
        """Test mu + dt (mu^beta g^beta - mu) for mu = 2, g = 1, beta = 2, dt = 0.1."""
        dynamics = make_dynamics(square_pair, tc1_rhs, beta=2.0, fixed_dt=0.1)
        n = square_pair.coarse.num_triangles
        state = SimState(mu=np.full(n, 2.0), u=np.zeros(square_pair.fine.num_nodes), dt=0.1)
        evaluation = Evaluation(u=state.u, g=np.ones(n), report=empty_report())
        advanced = dynamics.advance(state, evaluation)
        assert np.allclose(advanced.mu, 2.2, rtol=1e-15)
        assert advanced.step == 1
        assert advanced.time == pytest.approx(0.1)
        assert advanced.var == pytest.approx(1.0, rel=1e-12)

    def test_linear_exponent_increment(self, make_dynamics, square_pair, tc1_rhs, rng):
        """Test that beta = 1 gives mu g - mu."""
        dynamics = make_dynamics(square_pair, tc1_rhs, beta=1.0)
        mu = rng.uniform(0.1, 2.0, square_pair.coarse.num_triangles)
        g = rng.uniform(0.0, 2.0, square_pair.coarse.num_triangles)
        assert np.allclose(dynamics.increment(mu, g), mu * g - mu, atol=1e-14)

    def test_fixed_point(self, make_dynamics, square_pair, tc1_rhs):
        """Test that mu = g = 1 does not move."""
        dynamics = make_dynamics(square_pair, tc1_rhs, beta=1.5)
        ones = np.ones(square_pair.coarse.num_triangles)
        assert np.all(dynamics.increment(ones, ones) == 0.0)

    def test_step_size_rule(self, make_dynamics, square_pair, tc1_rhs):
        """Test the initial step, the growth limit, dt_max and the relative change cap."""
        dynamics = make_dynamics(square_pair, tc1_rhs, beta=1.5)
        state = dynamics.initial_state()
        for _ in range(15):
            evaluation = dynamics.evaluate(state.mu, state.u)
            delta = dynamics.increment(state.mu, evaluation.g)
            advanced = dynamics.advance(state, evaluation)
            previous = 0.01 if state.step == 0 else 1.2 * state.dt
            assert advanced.dt <= previous * (1.0 + 1e-12)
            assert advanced.dt <= 1.0
            assert advanced.dt * np.max(np.abs(delta) / state.mu) <= 0.2 * (1.0 + 1e-12)
            state = advanced

    def test_positivity_violation(self, make_dynamics, square_pair, zero_rhs):
        """Test that an overshooting step fails when clamping is disabled."""
        dynamics = make_dynamics(
            square_pair, zero_rhs, beta=0.5, fixed_dt=2.0, clamp_enabled=False
        )
        with pytest.raises(PositivityException):
            dynamics.step(dynamics.initial_state())

    def test_clamp_to_floor(self, make_dynamics, square_pair, zero_rhs):
        """Test that an overshooting step is clamped to mu_floor."""
        dynamics = make_dynamics(square_pair, zero_rhs, beta=0.5, fixed_dt=2.0)
        advanced = dynamics.step(dynamics.initial_state())
        assert np.all(advanced.mu == 1e-10)


class TestRunToSteady:
    """Tests for whole trajectories."""

    def test_pure_decay(self, make_dynamics, square_pair, zero_rhs):
        """Test geometric decay without transport and the growing step sizes."""
        dynamics = make_dynamics(square_pair, zero_rhs, beta=0.5, max_steps=20)
        state, records = dynamics.run_to_steady()
        assert not state.converged
        assert state.step == 20
        assert [r.step for r in records] == list(range(21))
        dts = np.array([r.dt for r in records[1:]])
        expected = np.minimum(0.2, 0.01 * 1.2 ** np.arange(20))
        assert np.allclose(dts, expected, rtol=1e-12)
        assert records[-1].mu_max == pytest.approx(np.prod(1.0 - dts), rel=1e-12)
        assert all(r.var == pytest.approx(1.0, rel=1e-12) for r in records[1:])
        assert all(r.energy == 0.0 for r in records)

    def test_record_stride(self, make_dynamics, square_pair, zero_rhs):
        """Test that records follow the stride and the final state is always recorded."""
        dynamics = make_dynamics(
            square_pair, zero_rhs, beta=0.5, max_steps=12, record_stride=5
        )
        _, records = dynamics.run_to_steady()
        assert [r.step for r in records] == [0, 5, 10, 12]

    def test_clamping_inactive_for_sublinear_exponent(self, make_dynamics, disk_pair, radial_rhs):
        """Test that clamping does not change a beta < 1 trajectory."""
        runs = [
            make_dynamics(
                disk_pair, radial_rhs, beta=0.5, max_steps=30, clamp_enabled=enabled
            ).run_to_steady()
            for enabled in (True, False)
        ]
        (clamped, clamped_records), (free, free_records) = runs
        assert np.array_equal(clamped.mu, free.mu)
        assert [r.lyapunov for r in clamped_records] == [r.lyapunov for r in free_records]

    @pytest.mark.slow
    def test_radial_converges_monotonically(self, make_dynamics, disk_pair, radial_rhs):
        """Test convergence below tau_t with a nonincreasing Lyapunov functional."""
        dynamics = make_dynamics(
            disk_pair, radial_rhs, beta=0.5, solver=SolverSettings(tol=1e-12)
        )
        state, records = dynamics.run_to_steady()
        assert state.converged
        assert records[-1].var <= 5e-7
        values = np.array([r.lyapunov for r in records])
        assert np.all(np.diff(values) <= 1e-10 * np.abs(values[:-1]))

    @pytest.mark.slow
    def test_lie_derivative_matches_finite_differences(
        self, make_dynamics, disk_pair, radial_rhs
    ):
        """Test (L(k+1) - L(k)) / dt against the analytic derivative along a fixed-step run."""
        dt = 1e-3
        dynamics = make_dynamics(
            disk_pair, radial_rhs, beta=0.5, fixed_dt=dt, solver=SolverSettings(tol=1e-12)
        )
        coarse = disk_pair.coarse
        state = dynamics.initial_state()
        values, derivatives = [], []
        for _ in range(41):
            evaluation = dynamics.evaluate(state.mu, state.u)
            values.append(lyapunov_from_norms(state.mu, evaluation.g, 0.5, coarse).lyapunov)
            derivatives.append(lie_derivative_from_norms(state.mu, evaluation.g, 0.5, coarse))
            state = dynamics.advance(state, evaluation)
        for k in range(20, 40):
            difference = (values[k + 1] - values[k]) / dt
            assert difference == pytest.approx(derivatives[k], rel=0.05)

    @pytest.mark.slow
    def test_limit_independent_of_initial_condition(self, make_dynamics, disk_pair, radial_rhs):
        """Test that different initial densities reach the same Lyapunov value."""
        finals = []
        for ic in (UniformIC(), RadialDipIC(), CheckerboardIC()):
            state, records = make_dynamics(disk_pair, radial_rhs, beta=0.5, ic=ic).run_to_steady()
            assert state.converged
            finals.append(records[-1].lyapunov)
        assert max(finals) - min(finals) <= 0.01 * min(finals)


class TestPreconditionerRefresh:
    """Tests for preconditioner reuse across time steps."""

    @pytest.mark.parametrize("kind, builds", [("jacobi", 12), ("ic0", 2)])
    def test_builds_per_kind(self, solver, stub_logger, square_pair, tc1_rhs, kind, builds):
        """Test that Jacobi is rebuilt every step and IC(0) every tenth step by default."""
        counting = CountingSolver(solver)
        config = SimConfig(beta=1.5, solver=SolverSettings(preconditioner=kind))
        dynamics = TransportDynamics(square_pair, tc1_rhs, config, counting, stub_logger)
        state = dynamics.initial_state()
        for _ in range(12):
            state = dynamics.step(state)
        assert counting.builds == builds

    def test_configured_interval(self, solver, stub_logger, square_pair, tc1_rhs):
        """Test that an explicit refresh interval applies to Jacobi too."""
        counting = CountingSolver(solver)
        settings = SolverSettings(preconditioner="jacobi", refresh_interval=5)
        config = SimConfig(beta=1.5, solver=settings)
        dynamics = TransportDynamics(square_pair, tc1_rhs, config, counting, stub_logger)
        state = dynamics.initial_state()
        for _ in range(11):
            state = dynamics.step(state)
        assert counting.builds == 3


@pytest.mark.slow
class TestRadialRefinement:
    """Tests against the closed-form radial optimum on nested polar meshes."""

    def test_error_decreases_with_refinement(self, sublinear_radial_levels):
        """Test that err falls at every level with a fitted rate between 0.6 and 1.2."""
        h = [pair.h for pair, _, _ in sublinear_radial_levels]
        errors = [records[-1].err for _, _, records in sublinear_radial_levels]
        assert all(state.converged for _, state, _ in sublinear_radial_levels)
        assert np.all(np.diff(errors) < 0.0)
        assert 0.6 <= convergence_rate(h, errors) <= 1.2

    def test_lyapunov_reaches_optimum(self, sublinear_radial_levels):
        """Test that the final L_beta is within 2% of the optimal value."""
        pair, _, records = sublinear_radial_levels[-1]
        optimum = optimal_lyapunov(ExactRadial(beta=0.5), pair.coarse)
        assert abs(records[-1].lyapunov - optimum) <= 0.02 * abs(optimum)

    def test_steady_state_is_stationary(self, sublinear_radial_levels):
        """Test that the converged density satisfies mu = g^(beta / (1 - beta)) on its support."""
        for pair, state, _ in sublinear_radial_levels:
            assert steady_residual(state.mu, state.u, 0.5, pair) <= 5e-3

    def test_linear_exponent_rate(self, solver, stub_logger):
        """Test that beta = 1 also converges under refinement, at rate at least 0.5."""
        results = run_radial_levels(solver, stub_logger, beta=1.0)
        h = [pair.h for pair, _, _ in results]
        errors = [records[-1].err for _, _, records in results]
        assert np.all(np.diff(errors) < 0.0)
        assert convergence_rate(h, errors) >= 0.5
