"""Vietoris-Rips complexes of subset families, their homology, and the
closed-form sphere-count oracles that verify it."""

from .setfam import (
    EQ,
    GT,
    LT,
    MAX_GROUND,
    ElementDeletion,
    SetFamily,
    Subset,
    complement_map,
    dist,
    fix_element_subfamily,
    gen_prefix,
    gen_uniform,
    gen_union,
    order_cmp,
)
from .complexes import (
    BuildBudgetExceeded,
    Complex,
    Simplex,
    build_flag,
    facet_dump,
    full_subcomplex,
    is_cone,
    link,
    maximal_simplices_bk,
    maximal_simplices_closed_form,
    sc_hypothesis_check,
    skeleton,
    star,
    star_cluster,
)
from .homology import (
    BettiVector,
    MatrixTooLarge,
    SNFDiagonal,
    SparseBoundaryMatrix,
    TruncatedComplex,
    betti_z2,
    boundary_matrix,
    euler_characteristic,
    homology_integer,
    smith_diagonal,
)
from .formulas import (
    GapVector,
    adjacent_pair_betti2,
    cross_polytope_sphere_dim,
    gap_vector,
    layer_increment,
    power_betti3,
    prefix_betti3,
    prefix_increment,
    skip_increment,
    skip_layer_sum,
    skip_pair_betti3,
    uniform_betti2,
    upto_betti3,
)
from .cli import (
    FamilySpec,
    Report,
    ReportEntry,
    SpecParseError,
    emit_report,
    parse_family_spec,
    run_three_layer_check,
    run_verify,
)

__version__ = "0.1.0"

__all__ = [
    "EQ",
    "GT",
    "LT",
    "MAX_GROUND",
    "BettiVector",
    "BuildBudgetExceeded",
    "Complex",
    "ElementDeletion",
    "FamilySpec",
    "GapVector",
    "MatrixTooLarge",
    "Report",
    "ReportEntry",
    "SNFDiagonal",
    "SetFamily",
    "Simplex",
    "SparseBoundaryMatrix",
    "SpecParseError",
    "Subset",
    "TruncatedComplex",
    "adjacent_pair_betti2",
    "betti_z2",
    "boundary_matrix",
    "build_flag",
    "complement_map",
    "cross_polytope_sphere_dim",
    "dist",
    "emit_report",
    "euler_characteristic",
    "facet_dump",
    "fix_element_subfamily",
    "full_subcomplex",
    "gap_vector",
    "gen_prefix",
    "gen_uniform",
    "gen_union",
    "homology_integer",
    "is_cone",
    "layer_increment",
    "link",
    "maximal_simplices_bk",
    "maximal_simplices_closed_form",
    "order_cmp",
    "parse_family_spec",
    "power_betti3",
    "prefix_betti3",
    "prefix_increment",
    "run_three_layer_check",
    "run_verify",
    "sc_hypothesis_check",
    "skeleton",
    "skip_increment",
    "skip_layer_sum",
    "skip_pair_betti3",
    "smith_diagonal",
    "star",
    "star_cluster",
    "uniform_betti2",
    "upto_betti3",
]
