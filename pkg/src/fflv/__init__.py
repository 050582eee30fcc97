"""FFLV polytopes of types A and C: vertices, permutation vertices, simple vertices."""

from .errors import Budget, BudgetExceeded, FFLVError, InvalidInput
from .kernels import BACKEND
from .weights import (
    EpsWeight, Perm, SignedPermC, WeightA, WeightC, act_perm_a, act_signed_perm_c,
    eps_c_to_a, mu_of_point_a, mu_of_point_c, weyl_dim_a, weyl_dim_c,
)
from .triangle import HRep, TriangleA, TriangleC
from .polytope_a import (
    contains_a, d_top, enumerate_dyck_paths_a, hrep_a, lattice_points_a, m_value_a, s_value,
)
from .vertices_a import (
    Antichain, AntichainTuple, antichains_of_qi, enumerate_vertices_a, is_nice_tuple,
    is_vertex_pair, pair_graph, tuple_point,
)
from .perm_simple import (
    SegmentFamily, b_stat, enumerate_rp, enumerate_rs, is_rp, is_rs, pbw_poly, psi, psi_inv,
    schroder, simple_by_perm, simple_vertices_a, x_of_e,
)
from .polytope_c import (
    contains_c, d_top_c, enumerate_dyck_paths_c, enumerate_symmetric_rp, enumerate_vertices_c,
    hrep_c, iota, lambda_bar, lambda_zero, lattice_points_c, m_value_c, phi, phi_inv,
    simple_vertices_c, w_c_of_e,
)

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "FFLVError", "InvalidInput", "BACKEND", "EpsWeight", "Perm",
    "SignedPermC", "WeightA", "WeightC", "act_perm_a", "act_signed_perm_c", "eps_c_to_a",
    "mu_of_point_a", "mu_of_point_c", "weyl_dim_a", "weyl_dim_c", "HRep", "TriangleA",
    "TriangleC", "contains_a", "d_top", "enumerate_dyck_paths_a", "hrep_a", "lattice_points_a",
    "m_value_a", "s_value", "Antichain", "AntichainTuple", "antichains_of_qi",
    "enumerate_vertices_a", "is_nice_tuple", "is_vertex_pair", "pair_graph", "tuple_point",
    "SegmentFamily", "b_stat", "enumerate_rp", "enumerate_rs", "is_rp", "is_rs", "pbw_poly",
    "psi", "psi_inv", "schroder", "simple_by_perm", "simple_vertices_a", "x_of_e", "contains_c",
    "d_top_c", "enumerate_dyck_paths_c", "enumerate_symmetric_rp", "enumerate_vertices_c",
    "hrep_c", "iota", "lambda_bar", "lambda_zero", "lattice_points_c", "m_value_c", "phi",
    "phi_inv", "simple_vertices_c", "w_c_of_e", "__version__",
]
