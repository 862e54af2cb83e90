"""Tests for the invariant self-test battery."""

import numpy as np

from src.application.use_cases import SelfCheckUseCase
from src.application.use_cases.self_check_use_case import dense_neumann_solve


class TestSelfCheckUseCase:
    """Tests for SelfCheckUseCase."""

    def test_all_checks_pass(self, solver, stub_logger):
        """Test that every check of the battery passes."""
        results = SelfCheckUseCase(solver, stub_logger).execute()
        assert [result.name for result in results] == [
            "mesh",
            "assembly",
            "solver",
            "lyapunov",
            "oracles",
        ]
        failed = [f"{result.name}: {result.detail}" for result in results if not result.passed]
        assert failed == []

    def test_dense_neumann_solve(self):
        """Test the bordered solve on a path graph Laplacian."""
        matrix = np.array([[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]])
        rhs = np.array([1.0, 0.0, -1.0])
        solution = dense_neumann_solve(matrix, rhs)
        assert np.allclose(matrix @ solution, rhs)
        assert abs(solution.sum()) <= 1e-14
