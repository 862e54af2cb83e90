from dependency_injector import containers, providers
from src.infra.config.settings import Settings
from src.infra.config.logger import LoggerConfig
from src.infra.services import (
    FileOutputRepository,
    PCGSolver,
    TomlScenarioLoader,
    TriangleMeshRepository,
)
from src.application.use_cases import (
    RunScenarioUseCase,
    SelfCheckUseCase,
    SweepBetaUseCase,
    SweepInitialConditionUseCase,
)


class Container(containers.DeclarativeContainer):
    """Container for dependency injection."""

    config = providers.Singleton(Settings)

    logger = providers.Singleton(LoggerConfig, settings=config)

    # Infrastructure services
    mesh_repository = providers.Singleton(TriangleMeshRepository, logger=logger)
    output_repository = providers.Singleton(FileOutputRepository, logger=logger)
    linear_solver = providers.Singleton(PCGSolver, logger=logger)
    scenario_loader = providers.Singleton(TomlScenarioLoader, settings=config, logger=logger)

    # Application use cases
    run_scenario_use_case = providers.Factory(
        RunScenarioUseCase,
        mesh_repository=mesh_repository,
        output_repository=output_repository,
        linear_solver=linear_solver,
        logger=logger,
    )

    sweep_beta_use_case = providers.Factory(
        SweepBetaUseCase,
        run_scenario=run_scenario_use_case,
        output_repository=output_repository,
        logger=logger,
    )

    sweep_initial_condition_use_case = providers.Factory(
        SweepInitialConditionUseCase,
        run_scenario=run_scenario_use_case,
        output_repository=output_repository,
        logger=logger,
    )

    self_check_use_case = providers.Factory(
        SelfCheckUseCase,
        linear_solver=linear_solver,
        logger=logger,
    )


container = Container()
