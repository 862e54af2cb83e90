"""Numerical services of the domain layer."""

from src.domain.services.mesh_builder import gen_unit_square, gen_disk_polar
from src.domain.services.refinement import refine_uniform
from src.domain.services.geometry import basis_gradients, element_geometry, locate_points
from src.domain.services.forcing_assembler import (
    assemble_rhs,
    balance,
    make_tc1_boxes,
    make_tc2_sources,
    make_tc3_sources,
)
from src.domain.services.fem_assembler import (
    StiffnessAssembler,
    assemble_stiffness,
    gradient_norms,
    dirichlet_energy,
)
from src.domain.services.radial_solution import (
    exact_z,
    exact_mu,
    exact_potential,
    sample_exact_mu,
    optimal_lyapunov,
)
from src.domain.services.branch_point import (
    gilbert_cost,
    gilbert_branch_point,
    reference_y_segments,
    distance_to_segments,
    support_distance_to_graph,
    extract_branch_point,
)
from src.domain.services.diagnostics import (
    DiagnosticsEvaluator,
    convergence_rate,
    err_metric,
    integral_mu,
    lie_derivative_rhs,
    lyapunov,
    mass_term,
    steady_residual,
    support_connects,
    support_stats,
)
from src.domain.services.initial_conditions import initial_conductivity
from src.domain.services.dynamics import TransportDynamics, var_metric

__all__ = [
    "gen_unit_square",
    "gen_disk_polar",
    "refine_uniform",
    "basis_gradients",
    "element_geometry",
    "locate_points",
    "assemble_rhs",
    "balance",
    "make_tc1_boxes",
    "make_tc2_sources",
    "make_tc3_sources",
    "StiffnessAssembler",
    "assemble_stiffness",
    "gradient_norms",
    "dirichlet_energy",
    "exact_z",
    "exact_mu",
    "exact_potential",
    "sample_exact_mu",
    "optimal_lyapunov",
    "gilbert_cost",
    "gilbert_branch_point",
    "reference_y_segments",
    "distance_to_segments",
    "support_distance_to_graph",
    "extract_branch_point",
    "DiagnosticsEvaluator",
    "convergence_rate",
    "err_metric",
    "integral_mu",
    "lie_derivative_rhs",
    "lyapunov",
    "mass_term",
    "steady_residual",
    "support_connects",
    "support_stats",
    "initial_conductivity",
    "TransportDynamics",
    "var_metric",
]
