"""argparse commands: run, sweep-beta, sweep-ic and check."""

import argparse
from pathlib import Path

from src.domain.exceptions import ConfigException, DomainException
from src.infra.config.di import Container

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
INITIAL_CONDITIONS = ("uniform1", "radial_dip", "checkerboard", "y_tube")


def _float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ic_list(text: str) -> list[str]:
    kinds = [item.strip() for item in text.split(",") if item.strip()]
    unknown = [kind for kind in kinds if kind not in INITIAL_CONDITIONS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown initial condition(s) {', '.join(unknown)}; "
            f"choose from {', '.join(INITIAL_CONDITIONS)}"
        )
    return kinds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dmk",
        description="Extended Dynamic Monge-Kantorovich transport simulator",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def scenario_command(name: str, help_text: str) -> argparse.ArgumentParser:
        command = commands.add_parser(name, help=help_text)
        command.add_argument("config", type=Path, help="Scenario TOML file")
        command.add_argument("--out", type=Path, default=None, help="Output directory override")
        command.add_argument("--seed", type=int, default=None, help="Seed override for tc2")
        return command

    scenario_command("run", "Run a scenario at every refinement level")
    sweep_beta = scenario_command("sweep-beta", "Run a scenario for several exponents")
    sweep_beta.add_argument("--betas", type=_float_list, required=True, help="e.g. 1.1,1.5,2,3")
    sweep_ic = scenario_command("sweep-ic", "Run a scenario from several initial conditions")
    sweep_ic.add_argument(
        "--ics",
        type=_ic_list,
        default=list(INITIAL_CONDITIONS[:3]),
        help="Comma-separated initial conditions",
    )
    commands.add_parser("check", help="Run the invariant self-test battery")
    return parser


def _run(args: argparse.Namespace, container: Container) -> int:
    config = container.scenario_loader().load(args.config, args.out, args.seed)
    summary = container.run_scenario_use_case().execute(config)
    return EXIT_FAILURE if summary.failed else EXIT_OK


def _sweep_beta(args: argparse.Namespace, container: Container) -> int:
    config = container.scenario_loader().load(args.config, args.out, args.seed)
    sweep = container.sweep_beta_use_case().execute(config, args.betas)
    return EXIT_FAILURE if any(row.error for row in sweep.rows) else EXIT_OK


def _sweep_ic(args: argparse.Namespace, container: Container) -> int:
    config = container.scenario_loader().load(args.config, args.out, args.seed)
    sweep = container.sweep_initial_condition_use_case().execute(config, args.ics)
    return EXIT_FAILURE if any(row.error for row in sweep.rows) else EXIT_OK


def _check(args: argparse.Namespace, container: Container) -> int:
    results = container.self_check_use_case().execute()
    return EXIT_OK if all(result.passed for result in results) else EXIT_FAILURE


HANDLERS = {
    "run": _run,
    "sweep-beta": _sweep_beta,
    "sweep-ic": _sweep_ic,
    "check": _check,
}


def dispatch(args: argparse.Namespace, container: Container) -> int:
    """Run the selected command and map failures to exit codes."""
    logger = container.logger().get_logger()
    try:
        return HANDLERS[args.command](args, container)
    except ConfigException as e:
        logger.error(str(e))
        return EXIT_CONFIG
    except DomainException as e:
        logger.error(str(e))
        return EXIT_FAILURE
