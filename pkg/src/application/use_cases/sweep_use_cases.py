"""Parameter sweep use cases: exponent beta and initial condition."""

from pathlib import Path

from pydantic import ValidationError

from src.application.dtos import RunSummary, ScenarioConfig, SweepRow, SweepSummary
from src.application.use_cases.run_scenario_use_case import RunScenarioUseCase
from src.domain.exceptions import ConfigException
from src.domain.repositories import IOutputRepository
from src.infra.config.logger import ILogger


def sweep_row(label: str, summary: RunSummary, initial_condition: str) -> SweepRow:
    """Row built from the finest successful level of a run."""
    finest = summary.finest
    failed = [level.error for level in summary.levels if not level.ok]
    if finest is None:
        return SweepRow(
            label=label,
            beta=summary.beta,
            initial_condition=initial_condition,
            converged=False,
            error="; ".join(e for e in failed if e),
        )
    return SweepRow(
        label=label,
        beta=summary.beta,
        initial_condition=initial_condition,
        converged=finest.converged,
        lyapunov=finest.lyapunov,
        support_fraction=finest.support_fraction,
        branch_y=finest.branch_point.y if finest.branch_point is not None else None,
        err=finest.err,
    )


class _SweepUseCase:
    def __init__(
        self,
        run_scenario: RunScenarioUseCase,
        output_repository: IOutputRepository,
        logger: ILogger,
    ):
        self.run_scenario = run_scenario
        self.output_repository = output_repository
        self.logger = logger.get_logger()

    def _finish(self, sweep: SweepSummary, root: Path) -> SweepSummary:
        outcome = self.output_repository.write_document(
            sweep.model_dump(mode="json"), root / "sweep_summary.json"
        )
        if outcome.is_err():
            self.logger.warning(outcome.err_value)
        self.logger.info(f"Sweep over {sweep.parameter}:\n{sweep.table()}")
        return sweep


class SweepBetaUseCase(_SweepUseCase):
    """Runs one scenario for several exponents, each in its own directory."""

    def execute(self, config: ScenarioConfig, betas: list[float]) -> SweepSummary:
        root = Path(config.scenario.output_dir)
        sweep = SweepSummary(parameter="beta", scenario=config.scenario.name)
        for beta in betas:
            label = f"beta_{beta:g}"
            try:
                variant = config.with_overrides(
                    dynamics={"beta": beta}, scenario={"output_dir": str(root / label)}
                )
            except ValidationError as e:
                raise ConfigException(f"--betas: {beta}: {e.errors()[0]['msg']}")
            summary = self.run_scenario.execute(variant)
            sweep.rows.append(sweep_row(label, summary, variant.initial_condition.kind))
        return self._finish(sweep, root)


class SweepInitialConditionUseCase(_SweepUseCase):
    """Runs one scenario from several initial conductivities.

    Parameters of the configured initial condition are kept when its kind
    is part of the sweep; the other kinds use their defaults.
    """

    def execute(self, config: ScenarioConfig, kinds: list[str]) -> SweepSummary:
        root = Path(config.scenario.output_dir)
        sweep = SweepSummary(parameter="initial_condition", scenario=config.scenario.name)
        configured = config.initial_condition.model_dump(mode="json")
        for kind in kinds:
            ic = configured if configured["kind"] == kind else {"kind": kind}
            try:
                variant = config.with_initial_condition(ic).with_overrides(
                    scenario={"output_dir": str(root / kind)}
                )
            except ValidationError as e:
                raise ConfigException(f"--ics: {kind}: {e.errors()[0]['msg']}")
            summary = self.run_scenario.execute(variant)
            sweep.rows.append(sweep_row(kind, summary, kind))
        return self._finish(sweep, root)
