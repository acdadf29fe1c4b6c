"""Cartier-operator computations on the Suzuki curves S_m over GF(2^(2m+1))."""

from ._core import (
    BitMatrix,
    SuzukiParams,
    a_number,
    a_number_from_matrix,
    basis_monomials,
    cartier_matrix,
    decomposition_bound,
    derive_constraints,
    final_types,
    is_maximal_over,
    lattice_count,
    load_matrix,
    make_params,
    nu_g,
    point_count,
    point_count_naive,
    rank,
    rank_profile,
    save_matrix,
    semigroup_count,
    superspecial,
)

__all__ = [
    "BitMatrix",
    "SuzukiParams",
    "a_number",
    "a_number_from_matrix",
    "basis_monomials",
    "cartier_matrix",
    "decomposition_bound",
    "derive_constraints",
    "final_types",
    "is_maximal_over",
    "lattice_count",
    "load_matrix",
    "make_params",
    "nu_g",
    "point_count",
    "point_count_naive",
    "rank",
    "rank_profile",
    "save_matrix",
    "semigroup_count",
    "superspecial",
]
