"""Exact combinatorics of simple root systems and their minimal-orbit invariants."""

from minorb.rootsys import (
    SimpleType,
    Component,
    parse_type,
    canonicalize,
    cartan_matrix,
    inverse_cartan,
    symmetrizers,
    positive_roots,
    highest_root,
    dim_simple,
    root_to_weight,
    subdiagram_components,
)
from minorb.repdim import dim_irrep, dim_irrep_product, dual_weight, weyl_vector
from minorb.parabolic import (
    LeviData,
    levi_data,
    dim_u_by_accounting,
    parabolic_of_weight,
    dim_min_orbit,
    orbit_type,
    closure_is_smooth,
)
from minorb.grading import (
    GradingReport,
    BranchReport,
    BranchSummand,
    VAlphaData,
    grade_adjoint,
    dim_v_alpha,
    lowest_weight_of_v_alpha,
    branch_adjoint,
)
from minorb.invariants import (
    Torus,
    ReductiveWitness,
    BoundCertificate,
    ExistenceWitness,
    InvariantReport,
    compute_m,
    compute_r,
    r_of_levi,
    sukhanov_refined,
    compute_d,
    adjoint_nullcone_dim,
    full_report,
)

__all__ = [
    "SimpleType",
    "Component",
    "parse_type",
    "canonicalize",
    "cartan_matrix",
    "inverse_cartan",
    "symmetrizers",
    "positive_roots",
    "highest_root",
    "dim_simple",
    "root_to_weight",
    "subdiagram_components",
    "dim_irrep",
    "dim_irrep_product",
    "dual_weight",
    "weyl_vector",
    "LeviData",
    "levi_data",
    "dim_u_by_accounting",
    "parabolic_of_weight",
    "dim_min_orbit",
    "orbit_type",
    "closure_is_smooth",
    "GradingReport",
    "BranchReport",
    "BranchSummand",
    "VAlphaData",
    "grade_adjoint",
    "dim_v_alpha",
    "lowest_weight_of_v_alpha",
    "branch_adjoint",
    "Torus",
    "ReductiveWitness",
    "BoundCertificate",
    "ExistenceWitness",
    "InvariantReport",
    "compute_m",
    "compute_r",
    "r_of_levi",
    "sukhanov_refined",
    "compute_d",
    "adjoint_nullcone_dim",
    "full_report",
]
