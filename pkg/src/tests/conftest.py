"""Pytest fixtures: small meshes, refined pairs, a solver and a quiet logger."""

import numpy as np
import pytest
from loguru import logger as loguru_logger

from src.domain.entities import RadialForcing, SimConfig, Triangulation
from src.domain.services import (
    assemble_rhs,
    gen_disk_polar,
    gen_unit_square,
    make_tc1_boxes,
    refine_uniform,
)
from src.domain.repositories import ILogger
from src.infra.services import PCGSolver


class StubLogger(ILogger):
    """ILogger handing out loguru without installing handlers."""

    def get_logger(self):
        return loguru_logger

    def configure(self) -> "StubLogger":
        return self


@pytest.fixture(scope="session")
def stub_logger():
    return StubLogger()


@pytest.fixture(scope="session")
def solver(stub_logger):
    return PCGSolver(stub_logger)


@pytest.fixture
def two_triangle_square():
    """Unit square cut along its rising diagonal."""
    nodes = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
    return Triangulation.from_connectivity(nodes, [[0, 1, 2], [0, 2, 3]])


@pytest.fixture
def square_mesh():
    return gen_unit_square(4)


@pytest.fixture
def square_pair():
    return refine_uniform(gen_unit_square(4))


@pytest.fixture
def disk_pair():
    """Coarse polar disk with rings at multiples of 1/6 and 16 sectors."""
    return refine_uniform(gen_disk_polar(6, 16))


@pytest.fixture
def tc1_rhs(square_pair):
    return assemble_rhs(make_tc1_boxes(), square_pair)


@pytest.fixture
def radial_rhs(disk_pair):
    return assemble_rhs(RadialForcing(), disk_pair)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def base_sim_config():
    return SimConfig(beta=0.5, max_steps=50)
