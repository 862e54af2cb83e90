"""Tests for the weighted stiffness matrix and gradient norms."""

import math

import numpy as np
import pytest

from src.domain.exceptions import AssemblyException
from src.domain.services import (
    StiffnessAssembler,
    assemble_stiffness,
    dirichlet_energy,
    element_geometry,
)


def reference_laplacian(mesh) -> np.ndarray:
    """Dense P1 Laplacian built triangle by triangle."""
    matrix = np.zeros((mesh.num_nodes, mesh.num_nodes))
    for t, tri in enumerate(mesh.triangles):
        geometry = element_geometry(mesh, t)
        local = geometry.area * geometry.basis_gradients @ geometry.basis_gradients.T
        matrix[np.ix_(tri, tri)] += local
    return matrix


class TestStiffness:
    """Tests for A[mu] on a refined pair."""

    def test_unit_conductivity_is_laplacian(self, square_pair):
        """Test that mu = 1 gives the plain P1 Laplacian of the fine mesh."""
        assembler = StiffnessAssembler(square_pair)
        matrix = assembler.stiffness(np.ones(square_pair.coarse.num_triangles)).toarray()
        assert np.max(np.abs(matrix - reference_laplacian(square_pair.fine))) <= 1e-13

    def test_symmetric_with_zero_row_sums(self, disk_pair, rng):
        """Test symmetry and constants in the kernel for random mu."""
        mu = rng.uniform(0.1, 2.0, disk_pair.coarse.num_triangles)
        matrix = StiffnessAssembler(disk_pair).stiffness(mu)
        dense = matrix.toarray()
        assert np.allclose(dense, dense.T, atol=1e-14)
        scale = np.abs(dense).max()
        assert np.abs(dense.sum(axis=1)).max() <= 1e-12 * scale

    def test_linear_in_mu(self, square_pair, rng):
        """Test that doubling mu doubles the matrix."""
        assembler = StiffnessAssembler(square_pair)
        mu = rng.uniform(0.5, 1.5, square_pair.coarse.num_triangles)
        doubled = assembler.stiffness(2.0 * mu).toarray()
        assert np.allclose(doubled, 2.0 * assembler.stiffness(mu).toarray(), rtol=1e-14)

    def test_pattern_matches_node_pairs(self, square_pair):
        """Test that nnz counts each connected node pair once."""
        assembler = StiffnessAssembler(square_pair)
        fine = square_pair.fine
        expected = fine.num_nodes + 2 * fine.num_edges
        assert assembler.nnz == expected

    def test_quadratic_form_is_twice_energy(self, square_pair, rng):
        """Test u^T A[mu] u = 2 E(mu, u)."""
        assembler = StiffnessAssembler(square_pair)
        mu = rng.uniform(0.1, 2.0, square_pair.coarse.num_triangles)
        u = rng.standard_normal(square_pair.fine.num_nodes)
        quadratic = u @ (assembler.stiffness(mu) @ u)
        assert quadratic == pytest.approx(2.0 * assembler.dirichlet_energy(mu, u), rel=1e-12)

    def test_module_functions_agree(self, disk_pair, rng):
        """Test the one-shot helpers against a reused assembler."""
        mu = rng.uniform(0.1, 2.0, disk_pair.coarse.num_triangles)
        u = rng.standard_normal(disk_pair.fine.num_nodes)
        matrix = assemble_stiffness(disk_pair, mu)
        assert (matrix != StiffnessAssembler(disk_pair).stiffness(mu)).nnz == 0
        energy = dirichlet_energy(disk_pair, mu, u)
        assert 0.5 * u @ (matrix @ u) == pytest.approx(energy, rel=1e-12)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan])
    def test_rejects_nonpositive_mu(self, square_pair, bad):
        """Test that mu must be finite and positive."""
        mu = np.ones(square_pair.coarse.num_triangles)
        mu[3] = bad
        with pytest.raises(AssemblyException):
            StiffnessAssembler(square_pair).stiffness(mu)

    def test_rejects_wrong_shape(self, square_pair):
        """Test that mu must have one entry per coarse triangle."""
        with pytest.raises(AssemblyException):
            StiffnessAssembler(square_pair).stiffness(np.ones(5))


class TestGradientNorms:
    """Tests for coarse gradient norms of fine P1 fields."""

    def test_linear_field(self, disk_pair):
        """Test that u = x + 2y has |grad u| = sqrt(5) everywhere."""
        nodes = disk_pair.fine.nodes
        u = nodes[:, 0] + 2.0 * nodes[:, 1]
        g = StiffnessAssembler(disk_pair).gradient_norms(u)
        assert np.allclose(g, math.sqrt(5.0), rtol=1e-12)

    def test_constant_field(self, square_pair):
        """Test that constants have zero gradient."""
        g = StiffnessAssembler(square_pair).gradient_norms(np.full(square_pair.fine.num_nodes, 3.0))
        assert np.max(g) <= 1e-12

    def test_rejects_wrong_shape(self, square_pair):
        """Test that u must live on the fine nodes."""
        with pytest.raises(AssemblyException):
            StiffnessAssembler(square_pair).gradient_norms(np.zeros(3))
