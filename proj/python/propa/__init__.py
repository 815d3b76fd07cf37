"""Witness constructions for property A on finite metric spaces.

Everything is computed exactly: measures carry ``fractions.Fraction``
entries, and the only floating-point quantity is the closed-form variation
bound. See the README for the command-line interface built on the same core.
"""

from propa._core import (
    BOUND_TOLERANCE,
    UNBOUNDED_RADIUS,
    BoundCurveRow,
    Cover,
    CoverStats,
    DimEstimate,
    DimQuery,
    FiniteMetricSpace,
    L1Vector,
    LebesgueVerdict,
    NestingReport,
    PairAudit,
    PreconditionError,
    SpaceKind,
    ValidationError,
    WitnessParams,
    WitnessReport,
    __version__,
    bound_curve,
    bound_curve_csv,
    choose_basepoints,
    containment_radii,
    containment_row,
    cover_doc,
    cover_stats,
    dim_doc,
    dim_exact_tiny,
    dim_upper,
    eta,
    exact_lebesgue_at_least,
    format_real,
    from_graph,
    greedy_net_cover,
    grid_space,
    integer_scaling_check,
    interval_cover,
    l1_distance,
    mesh,
    multiplicity,
    nesting_check,
    pair_audit,
    parse_cover_doc,
    parse_graph_edge_list,
    parse_space_doc,
    s_set,
    set_diameter,
    space_doc,
    stats_doc,
    theoretical_bound,
    threshold_cliques,
    tree_annuli_cover,
    tree_node_depth,
    tree_space,
    validate_cover,
    witness_doc,
    witness_report,
    xi_uniform,
    zeta,
)

__all__ = [
    "BOUND_TOLERANCE",
    "UNBOUNDED_RADIUS",
    "BoundCurveRow",
    "Cover",
    "CoverStats",
    "DimEstimate",
    "DimQuery",
    "FiniteMetricSpace",
    "L1Vector",
    "LebesgueVerdict",
    "NestingReport",
    "PairAudit",
    "PreconditionError",
    "SpaceKind",
    "ValidationError",
    "WitnessParams",
    "WitnessReport",
    "__version__",
    "bound_curve",
    "bound_curve_csv",
    "choose_basepoints",
    "containment_radii",
    "containment_row",
    "cover_doc",
    "cover_stats",
    "dim_doc",
    "dim_exact_tiny",
    "dim_upper",
    "eta",
    "exact_lebesgue_at_least",
    "format_real",
    "from_graph",
    "greedy_net_cover",
    "grid_space",
    "integer_scaling_check",
    "interval_cover",
    "l1_distance",
    "mesh",
    "multiplicity",
    "nesting_check",
    "pair_audit",
    "parse_cover_doc",
    "parse_graph_edge_list",
    "parse_space_doc",
    "s_set",
    "set_diameter",
    "space_doc",
    "stats_doc",
    "theoretical_bound",
    "threshold_cliques",
    "tree_annuli_cover",
    "tree_node_depth",
    "tree_space",
    "validate_cover",
    "witness_doc",
    "witness_report",
    "xi_uniform",
    "zeta",
]
