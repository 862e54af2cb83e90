"""Forward Euler evolution of the conductivity coupled to the potential solve."""

from typing import NamedTuple

import numpy as np

from src.domain.entities import (
    DiagnosticsRecord,
    ExactRadial,
    RefinedPair,
    RhsVector,
    SimConfig,
    SimState,
    SolveReport,
)
from src.domain.exceptions import DiagnosticsDomainException, PositivityException
from src.domain.repositories import ILinearSolver, ILogger, IPreconditioner
from src.domain.services.diagnostics import DiagnosticsEvaluator, l2_norm
from src.domain.services.fem_assembler import StiffnessAssembler
from src.domain.services.initial_conditions import initial_conductivity

DT_GROWTH = 1.2


def var_metric(mu_new, mu_old, dt: float, mesh) -> float:
    """||mu_new - mu_old|| / (dt ||mu_old||) in the area-weighted L2 norm."""
    if dt <= 0.0:
        raise DiagnosticsDomainException(f"dt must be positive, got {dt}")
    reference = l2_norm(mu_old, mesh)
    if reference == 0.0:
        raise DiagnosticsDomainException("previous conductivity has zero norm")
    return l2_norm(np.asarray(mu_new) - np.asarray(mu_old), mesh) / (dt * reference)


class Evaluation(NamedTuple):
    u: np.ndarray
    g: np.ndarray
    report: SolveReport


class TransportDynamics:
    """Time stepper for one scenario on one refined pair.

    Args:
        pair: Coarse mesh for mu and its refinement for u.
        rhs: Balanced load vector on the fine nodes.
        config: Stepping parameters.
        solver: Linear solver for the weighted Laplacian.
        logger: Logger for the application.
        exact: Optimal density, when known, for the err column.
    """

    def __init__(
        self,
        pair: RefinedPair,
        rhs: RhsVector,
        config: SimConfig,
        solver: ILinearSolver,
        logger: ILogger,
        exact: ExactRadial | None = None,
    ):
        self.pair = pair
        self.rhs = rhs
        self.config = config
        self.solver = solver
        self.logger = logger.get_logger()
        self.assembler = StiffnessAssembler(pair)
        self.diagnostics = DiagnosticsEvaluator(
            pair, config.beta, config.support_threshold, exact
        )
        self._preconditioner: IPreconditioner | None = None
        self._solves = 0

    def initial_state(self) -> SimState:
        mu = initial_conductivity(self.config.ic, self.pair.coarse)
        return SimState(
            mu=mu, u=np.zeros(self.pair.fine.num_nodes), dt=self.config.dt_initial
        )

    def evaluate(self, mu: np.ndarray, u_guess: np.ndarray | None = None) -> Evaluation:
        """Solve A[mu] u = b and collapse |grad u| onto the coarse mesh."""
        settings = self.config.solver
        matrix = self.assembler.stiffness(mu)
        refresh = self._solves % settings.effective_refresh_interval == 0
        if self._preconditioner is None or refresh:
            self._preconditioner = self.solver.build_preconditioner(
                matrix, settings.preconditioner
            )
        u, report = self.solver.solve(
            matrix,
            self.rhs.values,
            x0=u_guess,
            tol=settings.tol,
            max_iter=settings.max_iter,
            preconditioner=self._preconditioner,
        )
        self._solves += 1
        return Evaluation(u=u, g=self.assembler.gradient_norms(u), report=report)

    def increment(self, mu: np.ndarray, g: np.ndarray) -> np.ndarray:
        beta = self.config.beta
        return mu**beta * g**beta - mu

    def choose_dt(self, state: SimState, delta: np.ndarray) -> float:
        if self.config.fixed_dt is not None:
            return self.config.fixed_dt
        previous = self.config.dt_initial if state.step == 0 else DT_GROWTH * state.dt
        rate = float(np.max(np.abs(delta) / state.mu))
        limit = self.config.growth_cap / rate if rate > 0.0 else np.inf
        return float(min(self.config.dt_max, previous, limit))

    def advance(self, state: SimState, evaluation: Evaluation) -> SimState:
        delta = self.increment(state.mu, evaluation.g)
        dt = self.choose_dt(state, delta)
        mu = state.mu + dt * delta
        if self.config.clamp_enabled:
            mu = np.maximum(mu, self.config.mu_floor)
        elif np.any(mu <= 0.0):
            raise PositivityException(
                f"step {state.step + 1} would give min mu = {mu.min():.3e} with dt = {dt:.3e}"
            )
        return SimState(
            step=state.step + 1,
            time=state.time + dt,
            mu=mu,
            u=evaluation.u,
            dt=dt,
            var=var_metric(mu, state.mu, dt, self.pair.coarse),
            solve_report=evaluation.report,
        )

    def step(self, state: SimState) -> SimState:
        return self.advance(state, self.evaluate(state.mu, state.u))

    def _record(self, state: SimState, evaluation: Evaluation) -> DiagnosticsRecord:
        record = self.diagnostics.record(state, evaluation.g, evaluation.report.iterations)
        self.logger.debug(
            f"step {record.step}: t={record.time:.4g} dt={record.dt:.3g} "
            f"var={record.var} L={record.lyapunov:.10g} cg={record.cg_iterations}"
        )
        return record

    def run_to_steady(
        self, state: SimState | None = None
    ) -> tuple[SimState, list[DiagnosticsRecord]]:
        """Step until var <= tau_t or max_steps.

        Records hold (mu^k, u^k) every `record_stride` steps; the final state
        always gets a record, with u solved for its own mu.
        """
        config = self.config
        state = state or self.initial_state()
        records: list[DiagnosticsRecord] = []
        converged = False
        while state.step < config.max_steps:
            evaluation = self.evaluate(state.mu, state.u)
            if state.step % config.record_stride == 0:
                records.append(self._record(state, evaluation))
            state = self.advance(state, evaluation)
            if state.var <= config.tau_t:
                converged = True
                break

        evaluation = self.evaluate(state.mu, state.u)
        state = state.model_copy(
            update={"u": evaluation.u, "solve_report": evaluation.report, "converged": converged}
        )
        records.append(self._record(state, evaluation))
        if converged:
            self.logger.info(f"converged after {state.step} steps, t = {state.time:.6g}")
        else:
            self.logger.warning(
                f"not converged after {state.step} steps, last var = {state.var:.3e}"
            )
        return state, records
