"""Invariant self-test battery run by the `check` command."""

from collections.abc import Callable

import numpy as np

from src.application.dtos import CheckResult
from src.domain.entities import PreconditionerKind, RadialForcing
from src.domain.exceptions import DomainException
from src.domain.repositories import ILinearSolver
from src.domain.services import (
    StiffnessAssembler,
    assemble_rhs,
    exact_z,
    gen_disk_polar,
    gen_unit_square,
    gilbert_branch_point,
    lyapunov,
    make_tc1_boxes,
    refine_uniform,
    var_metric,
)
from src.infra.config.logger import ILogger


def dense_neumann_solve(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Mean-zero solution of a singular Neumann system via a bordered dense solve."""
    n = len(rhs)
    bordered = np.zeros((n + 1, n + 1))
    bordered[:n, :n] = matrix
    bordered[:n, n] = 1.0
    bordered[n, :n] = 1.0
    solution = np.linalg.solve(bordered, np.append(rhs, 0.0))
    return solution[:n]


class SelfCheckUseCase:
    """Runs fast numerical invariants without a test framework."""

    def __init__(self, linear_solver: ILinearSolver, logger: ILogger):
        self.linear_solver = linear_solver
        self.logger = logger.get_logger()

    def _check_mesh(self) -> str:
        mesh = gen_unit_square(4)
        if mesh.euler_characteristic != 1:
            raise AssertionError(f"Euler characteristic {mesh.euler_characteristic}")
        pair = refine_uniform(mesh)
        return f"{pair.fine.num_triangles} fine triangles partition {mesh.num_triangles} coarse"

    def _check_assembly(self) -> str:
        pair = refine_uniform(gen_unit_square(4))
        mu = np.linspace(0.5, 2.0, pair.coarse.num_triangles)
        matrix = StiffnessAssembler(pair).stiffness(mu)
        dense = matrix.toarray()
        row_sums = np.abs(dense.sum(axis=1)).max() / np.abs(dense).max()
        asymmetry = np.abs(dense - dense.T).max()
        if row_sums > 1e-12 or asymmetry > 1e-14 * np.abs(dense).max():
            raise AssertionError(f"row sums {row_sums:.2e}, asymmetry {asymmetry:.2e}")
        return f"max relative row sum {row_sums:.1e}"

    def _check_solver(self) -> str:
        pair = refine_uniform(gen_unit_square(8))
        rhs = assemble_rhs(make_tc1_boxes(), pair).values
        matrix = StiffnessAssembler(pair).stiffness(np.ones(pair.coarse.num_triangles))
        u, report = self.linear_solver.solve(
            matrix, rhs, tol=1e-13, preconditioner=PreconditionerKind.JACOBI
        )
        difference = np.abs(u - dense_neumann_solve(matrix.toarray(), rhs)).max()
        if difference > 1e-10:
            raise AssertionError(f"max nodal difference {difference:.2e}")
        return f"{report.iterations} iterations, max nodal difference {difference:.1e}"

    def _check_lyapunov(self) -> str:
        pair = refine_uniform(gen_disk_polar(3, 16))
        rhs = assemble_rhs(RadialForcing(), pair).values
        mu = np.linspace(0.2, 1.5, pair.coarse.num_triangles)
        matrix = StiffnessAssembler(pair).stiffness(mu)
        u, _ = self.linear_solver.solve(matrix, rhs, tol=1e-12)
        value = lyapunov(mu, u, 0.5, pair)
        work = 0.5 * float(rhs @ u)
        mismatch = abs(value.energy - work) / abs(work)
        if mismatch > 1e-8:
            raise AssertionError(f"E_f differs from b.u/2 by {mismatch:.2e}")
        return f"E_f = b.u/2 to {mismatch:.1e}"

    def _check_oracles(self) -> str:
        steiner = gilbert_branch_point(0.0)
        linear = gilbert_branch_point(1.0)
        if abs(steiner - 0.84226) > 1e-4 or abs(linear - 0.1) > 1e-6:
            raise AssertionError(f"c(0) = {steiner}, c(1) = {linear}")
        if abs(exact_z(1.0)) > 1e-15 or abs(exact_z(1.0 / 3.0) + 1.0 / 6.0) > 1e-15:
            raise AssertionError("radial flux values are off")
        mesh = gen_unit_square(2)
        mu = np.linspace(1.0, 2.0, mesh.num_triangles)
        homogeneity = var_metric(1.1 * mu, mu, 0.1, mesh)
        if abs(homogeneity - 1.0) > 1e-12:
            raise AssertionError(f"var of (1 + dt) mu is {homogeneity}")
        return f"c(0) = {steiner:.6f}, c(1) = {linear:.6f}"

    def execute(self) -> list[CheckResult]:
        checks: list[tuple[str, Callable[[], str]]] = [
            ("mesh", self._check_mesh),
            ("assembly", self._check_assembly),
            ("solver", self._check_solver),
            ("lyapunov", self._check_lyapunov),
            ("oracles", self._check_oracles),
        ]
        results = []
        for name, check in checks:
            try:
                results.append(CheckResult(name=name, passed=True, detail=check()))
            except (AssertionError, DomainException) as e:
                results.append(CheckResult(name=name, passed=False, detail=str(e)))
        for result in results:
            log = self.logger.info if result.passed else self.logger.error
            log(f"check {result.name}: {'ok' if result.passed else 'FAILED'} {result.detail}")
        return results
