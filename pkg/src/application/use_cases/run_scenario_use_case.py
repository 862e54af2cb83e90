"""Run scenario use case."""

import time
from pathlib import Path

import numpy as np
from result import Err, Ok, Result

from src.application.dtos import LevelSummary, RunSummary, ScenarioConfig
from src.domain.entities import (
    BoxesForcing,
    ExactRadial,
    ForcingSpec,
    RefinedPair,
    SimConfig,
    Triangulation,
    YTubeIC,
)
from src.domain.exceptions import DomainException, EmptySupportException
from src.domain.repositories import ILinearSolver, IMeshRepository, IOutputRepository
from src.domain.services import (
    TransportDynamics,
    assemble_rhs,
    convergence_rate,
    extract_branch_point,
    gen_disk_polar,
    gen_unit_square,
    gilbert_branch_point,
    optimal_lyapunov,
    refine_uniform,
    support_connects,
    support_distance_to_graph,
    support_stats,
)
from src.domain.services.diagnostics import steady_residual_from_norms
from src.infra.config.logger import ILogger


class RunScenarioUseCase:
    """Use case for running one scenario over its nested refinement levels."""

    def __init__(
        self,
        mesh_repository: IMeshRepository,
        output_repository: IOutputRepository,
        linear_solver: ILinearSolver,
        logger: ILogger,
    ):
        """Initialize the use case with required repositories."""
        self.mesh_repository = mesh_repository
        self.output_repository = output_repository
        self.linear_solver = linear_solver
        self._logger_config = logger
        self.logger = logger.get_logger()

    def coarse_mesh(self, config: ScenarioConfig) -> Triangulation:
        mesh = config.mesh
        if mesh.from_files:
            return self.mesh_repository.read(Path(mesh.node_file), Path(mesh.ele_file))
        if mesh.generator == "disk_polar":
            return gen_disk_polar(mesh.n_r, mesh.n_t)
        return gen_unit_square(mesh.n)

    def execute(self, config: ScenarioConfig) -> RunSummary:
        """
        Execute the scenario.

        Steps:
        1. Write the resolved configuration
        2. Build the coarse mesh of level 0
        3. Run every level on the uniform refinement of the previous one
        4. Fit the err rate and write the summary

        Args:
            config: Resolved scenario configuration

        Returns:
            RunSummary with one entry per level; failed levels carry the error
        """
        output_dir = Path(config.scenario.output_dir)
        handler_id = self._logger_config.attach_run_log(output_dir / "run.log")
        try:
            return self._execute(config, output_dir)
        finally:
            self._logger_config.detach(handler_id)

    def _execute(self, config: ScenarioConfig, output_dir: Path) -> RunSummary:
        started = time.perf_counter()
        resolved = config.model_dump(mode="json")
        self.logger.info(
            f"Starting scenario {config.scenario.name}, beta={config.dynamics.beta}, "
            f"{config.scenario.levels} level(s), output {output_dir}"
        )
        self._report(
            self.output_repository.write_document(resolved, output_dir / "resolved_config.json")
        )

        # Step 1: Level 0 mesh and per-run data
        coarse = self.coarse_mesh(config)
        sim = config.sim_config()
        forcing = config.forcing_spec()
        exact = config.exact_solution()

        # Step 2: Nested levels
        levels: list[LevelSummary] = []
        for level in range(config.scenario.levels):
            pair = refine_uniform(coarse)
            outcome = self.run_level(
                level, pair, forcing, sim, exact, config, output_dir / f"level_{level}"
            )
            match outcome:
                case Ok(summary):
                    levels.append(summary)
                case Err(message):
                    levels.append(LevelSummary(level=level, status="failed", error=message))
            coarse = pair.fine

        # Step 3: Summary
        summary = RunSummary(
            scenario=config.scenario.name,
            beta=config.dynamics.beta,
            levels=levels,
            err_rate=self._err_rate(levels),
            reference_branch_y=(
                gilbert_branch_point(config.diagnostics.reference_q)
                if config.diagnostics.extract_branch_point
                else None
            ),
            branch_extraction=(
                config.diagnostics.extraction_settings().model_dump()
                if config.diagnostics.extract_branch_point
                else None
            ),
            wall_time=time.perf_counter() - started,
            config=resolved,
        )
        self._report(
            self.output_repository.write_document(
                summary.model_dump(mode="json"), output_dir / "summary.json"
            )
        )
        self.logger.info(
            f"Finished scenario {config.scenario.name} in {summary.wall_time:.1f} s"
            + (f", err rate {summary.err_rate:.3f}" if summary.err_rate is not None else "")
        )
        return summary

    def run_level(
        self,
        level: int,
        pair: RefinedPair,
        forcing: ForcingSpec,
        sim: SimConfig,
        exact: ExactRadial | None,
        config: ScenarioConfig,
        level_dir: Path,
    ) -> Result:
        """Run one level; domain errors become Err so later levels still run."""
        started = time.perf_counter()
        coarse = pair.coarse
        self.logger.info(
            f"Level {level}: {coarse.num_triangles} coarse triangles, "
            f"{pair.fine.num_nodes} fine nodes, h = {pair.h:.4g}"
        )
        try:
            rhs = assemble_rhs(forcing, pair)
            dynamics = TransportDynamics(
                pair, rhs, sim, self.linear_solver, self._logger_config, exact
            )
            state, records = dynamics.run_to_steady()
            g = dynamics.assembler.gradient_norms(state.u)
            final = records[-1]
            fraction, count = support_stats(state.mu, coarse, sim.support_threshold)
            summary = LevelSummary(
                level=level,
                h=pair.h,
                coarse_triangles=coarse.num_triangles,
                fine_nodes=pair.fine.num_nodes,
                converged=state.converged,
                steps=state.step,
                final_time=state.time,
                final_var=state.var,
                lyapunov=final.lyapunov,
                energy=final.energy,
                mass_term=final.mass_term,
                err=final.err,
                optimal_lyapunov=optimal_lyapunov(exact, coarse) if exact is not None else None,
                steady_residual=self._steady_residual(state.mu, g, sim),
                support_fraction=fraction,
                support_triangles=count,
                **self._structure_diagnostics(state.mu, coarse, forcing, sim, config),
            )
        except DomainException as e:
            self.logger.error(f"Level {level} failed: {e}")
            return Err(str(e))

        # Files of the level
        repository = self.output_repository
        for outcome in (
            repository.write_records(records, level_dir / "diagnostics.csv"),
            repository.write_cell_field(coarse, state.mu, "mu", level_dir / "mu_final.vtk"),
            repository.write_point_field(pair.fine, state.u, "u", level_dir / "u_final.vtk"),
            self.mesh_repository.write(
                coarse, level_dir / "coarse.node", level_dir / "coarse.ele"
            ),
            self.mesh_repository.write(
                pair.fine, level_dir / "fine.node", level_dir / "fine.ele"
            ),
        ):
            self._report(outcome)

        summary = summary.model_copy(update={"wall_time": time.perf_counter() - started})
        self.logger.info(
            f"Level {level} done: converged={summary.converged}, steps={summary.steps}, "
            f"L={summary.lyapunov:.10g}, support={summary.support_fraction:.4f}"
            + (f", err={summary.err:.4e}" if summary.err is not None else "")
        )
        return Ok(summary)

    def _steady_residual(self, mu: np.ndarray, g: np.ndarray, sim: SimConfig) -> float | None:
        if sim.beta == 1.0:
            return None
        try:
            return steady_residual_from_norms(mu, g, sim.beta, sim.support_threshold)
        except EmptySupportException as e:
            self.logger.warning(str(e))
            return None

    def _structure_diagnostics(
        self,
        mu: np.ndarray,
        coarse: Triangulation,
        forcing: ForcingSpec,
        sim: SimConfig,
        config: ScenarioConfig,
    ) -> dict:
        diagnostics = config.diagnostics
        cutoff = max(sim.support_threshold, diagnostics.relative_threshold * float(mu.max()))
        found = {}
        if diagnostics.extract_branch_point:
            found["branch_point"] = extract_branch_point(
                mu, coarse, sim.support_threshold, diagnostics.extraction_settings()
            )
        if config.scenario.name == "tc1" and isinstance(forcing, BoxesForcing):
            found["support_connects_boxes"] = support_connects(mu, coarse, forcing.boxes, cutoff)
        if isinstance(sim.ic, YTubeIC):
            found["support_distance_to_graph"] = support_distance_to_graph(
                mu, coarse, sim.ic.q, cutoff
            )
        return found

    def _err_rate(self, levels: list[LevelSummary]) -> float | None:
        pairs = [(s.h, s.err) for s in levels if s.ok and s.err is not None and s.err > 0.0]
        if len(pairs) < 2:
            return None
        h, err = zip(*pairs)
        return convergence_rate(h, err)

    def _report(self, outcome: Result) -> None:
        if isinstance(outcome, Err):
            self.logger.warning(outcome.err_value)
