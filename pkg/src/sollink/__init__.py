"""Exact linking numbers in Sol torus bundles and on cycle boundaries over
real quadratic fields, with the numeric completion kernels that pair with
them.  All linking data is exact rational; floats appear only in the
analytic layer (profiles, beta kernel, series evaluation)."""

from .errors import ConsistencyError, InputError
from .qfield import (
    FieldData,
    NormClass,
    QuadElem,
    brute_force_norm_solutions,
    enumerate_norm_classes,
    fundamental_unit,
    is_squarefree,
    make_field,
    reduce_totally_positive,
)
from .sol import (
    CapChain,
    SolManifold,
    area_period,
    boundary_cycle,
    build_cap,
    cap_intersect,
    crossing_parameters,
    expected_boundary,
    glueing_from_unit,
    link_fiber,
    make_sol,
)
from .cycles import (
    BoundaryComponent,
    LinkTable,
    WLattice,
    boundary_components,
    fiber_coords,
    j_perp,
    link_boundary,
    link_boundary_closed,
    link_table,
    multiplicity,
    symplectic_pairing,
    thread_count,
)
from .special_fn import (
    A_profile,
    Ap_profile,
    B_profile,
    Bp_profile,
    EvalReport,
    WPoint,
    beta_fn,
    beta_scaled,
    gamma_half,
    orbit_action,
    phi_profile,
    quad_form,
)
from .qseries import (
    InteriorTable,
    QExpansion,
    RatioReport,
    WEvalParams,
    WEvalReport,
    combine_interior,
    eval_W,
    holomorphic_ratio_test,
    lk_qexpansion,
    min_series_coeff,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "InputError",
    "FieldData",
    "NormClass",
    "QuadElem",
    "brute_force_norm_solutions",
    "enumerate_norm_classes",
    "fundamental_unit",
    "is_squarefree",
    "make_field",
    "reduce_totally_positive",
    "CapChain",
    "SolManifold",
    "area_period",
    "boundary_cycle",
    "build_cap",
    "cap_intersect",
    "crossing_parameters",
    "expected_boundary",
    "glueing_from_unit",
    "link_fiber",
    "make_sol",
    "BoundaryComponent",
    "LinkTable",
    "WLattice",
    "boundary_components",
    "fiber_coords",
    "j_perp",
    "link_boundary",
    "link_boundary_closed",
    "link_table",
    "multiplicity",
    "symplectic_pairing",
    "thread_count",
    "A_profile",
    "Ap_profile",
    "B_profile",
    "Bp_profile",
    "EvalReport",
    "WPoint",
    "beta_fn",
    "beta_scaled",
    "gamma_half",
    "orbit_action",
    "phi_profile",
    "quad_form",
    "InteriorTable",
    "QExpansion",
    "RatioReport",
    "WEvalParams",
    "WEvalReport",
    "combine_interior",
    "eval_W",
    "holomorphic_ratio_test",
    "lk_qexpansion",
    "min_series_coeff",
    "__version__",
]
