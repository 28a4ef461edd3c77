"""Exact Lie-theoretic invariants: restricted roots, parabolic codimensions,
minimal real representations and parabolic lower bounds for s(G)."""

from .bounds import (
    BoundReport,
    ParabolicBounds,
    refined_bound,
    s_lower,
    s_lower_value,
    small_multiplicity_check,
    superrigidity_bound,
    theorem_range,
)
from .catalogue import GroupDescriptor, GroupSpec, describe, load_catalogue, parse_group_spec, tabulated_invariant
from .flagcalc import (
    ParabolicSubset,
    dynkin_components,
    flag_codimension,
    maximal_parabolics,
    parabolic,
    r0_of_group,
    r0_of_parabolic,
    r_of_group,
    v_of_group,
)
from .repdim import (
    DominantWeight,
    freudenthal_dim,
    identify_subalgebra,
    min_nontrivial_complex_dim,
    min_real_rep,
    n_of_subalgebra,
    weyl_dim,
)
from .rootkit import (
    CoarseClass,
    RootSubspace,
    RootSystem,
    build_root_system,
    coarse_classes,
    filtration_is_ideal,
    positive_roots_by_height,
    span_complement_rank,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CoarseClass",
    "DominantWeight",
    "GroupDescriptor",
    "GroupSpec",
    "ParabolicBounds",
    "ParabolicSubset",
    "RootSubspace",
    "RootSystem",
    "build_root_system",
    "coarse_classes",
    "describe",
    "dynkin_components",
    "filtration_is_ideal",
    "flag_codimension",
    "freudenthal_dim",
    "identify_subalgebra",
    "load_catalogue",
    "maximal_parabolics",
    "min_nontrivial_complex_dim",
    "min_real_rep",
    "n_of_subalgebra",
    "parabolic",
    "parse_group_spec",
    "positive_roots_by_height",
    "r0_of_group",
    "r0_of_parabolic",
    "r_of_group",
    "refined_bound",
    "s_lower",
    "s_lower_value",
    "small_multiplicity_check",
    "span_complement_rank",
    "superrigidity_bound",
    "tabulated_invariant",
    "theorem_range",
    "v_of_group",
    "weyl_dim",
]
