"""Scenario files: TOML sections validated into ScenarioConfig."""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from src.application.dtos import ScenarioConfig
from src.domain.exceptions import ConfigException
from src.infra.config.logger import ILogger
from src.infra.config.settings import Settings


def describe_validation_error(source: Path, error: ValidationError) -> str:
    """One `<file>: <section>.<key>: <reason>` line per problem."""
    lines = []
    for problem in error.errors():
        location = ".".join(str(part) for part in problem["loc"])
        reason = problem["msg"]
        lines.append(f"{source}: {location}: {reason}" if location else f"{source}: {reason}")
    return "; ".join(lines)


class TomlScenarioLoader:
    """Reads a scenario file, applies CLI overrides and resolves run-time defaults.

    Args:
        settings: Process settings, for the default output root.
        logger: Logger for the application.
    """

    def __init__(self, settings: Settings, logger: ILogger):
        self.settings = settings
        self.logger = logger.get_logger()

    def _read(self, path: Path) -> dict:
        try:
            with path.open("rb") as handle:
                return tomllib.load(handle)
        except OSError as e:
            raise ConfigException(f"{path}: cannot read file: {e}")
        except tomllib.TOMLDecodeError as e:
            raise ConfigException(f"{path}: {e}")

    def load(
        self, path: Path | str, output_dir: Path | str | None = None, seed: int | None = None
    ) -> ScenarioConfig:
        """
        Load and validate a scenario.

        Args:
            path: Scenario file.
            output_dir: Replaces scenario.output_dir when given.
            seed: Replaces forcing.seed when given.

        Returns:
            ScenarioConfig: Fully resolved configuration.

        Raises:
            ConfigException: If the file is unreadable or invalid.
        """
        path = Path(path)
        data = self._read(path)
        if output_dir is not None:
            data.setdefault("scenario", {})["output_dir"] = str(output_dir)
        if seed is not None:
            data.setdefault("forcing", {})["seed"] = seed

        try:
            config = ScenarioConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigException(describe_validation_error(path, e))

        scenario_updates = {}
        if config.scenario.output_dir is None:
            scenario_updates["output_dir"] = str(Path(self.settings.output_root) / path.stem)
        mesh_updates = {}
        if config.mesh.from_files:
            for key in ("node_file", "ele_file"):
                file = Path(getattr(config.mesh, key))
                if not file.is_absolute():
                    mesh_updates[key] = str(path.parent / file)
        forcing_updates = {}
        if config.scenario.name == "tc2" and config.forcing.seed is None:
            forcing_updates["seed"] = int(np.random.SeedSequence().entropy % 2**32)
            self.logger.info(f"No tc2 seed given, drew seed {forcing_updates['seed']}")

        config = config.with_overrides(
            scenario=scenario_updates, mesh=mesh_updates, forcing=forcing_updates
        )
        self.logger.info(
            f"Loaded scenario {config.scenario.name} from {path} "
            f"(beta={config.dynamics.beta}, levels={config.scenario.levels})"
        )
        return config
