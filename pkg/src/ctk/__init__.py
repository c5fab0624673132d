"""Topological indices of simple graphs built from vertex degrees and
connection numbers (counts of vertices at distance exactly two),
exhaustive enumeration of degree-capped trees by canonical level
sequence, extremal family construction and search, and a
machine-verification suite for the identities and bounds relating
these quantities.
"""
from .enumeration import (
    DEFAULT_SCALE_GUARD,
    ScaleGuardError,
    TreeCode,
    enumerate_trees,
    format_levels,
    parse_levels,
    prufer_oracle,
    scale_guard_limit,
    tree_from_levels,
)
from .extremal import (
    FAMILIES,
    OBJECTIVES,
    ExtremalResult,
    brute_force_extremal,
    classify_max_family,
    closed_form,
    construct_family,
)
from .graphs import (
    Graph,
    build_graph,
    canonical_tree_code,
    connection_numbers,
    degrees,
    is_complete_graph,
    is_connected,
    is_path_graph,
    is_star_graph,
    is_tree,
    is_triangle_and_quadrangle_free,
)
from .indices import (
    IndexReport,
    bond_incident_connection,
    first_connection_zagreb,
    first_zagreb,
    first_zagreb_edge,
    index_report,
    modified_connection_zagreb,
    modified_connection_zagreb_edge,
    partition_counts,
    second_connection_zagreb,
    second_zagreb,
)
from .verify import (
    CHECK_TOKENS,
    BoundCheck,
    CheckRecord,
    StructureCheck,
    VerificationReport,
    check_connection_identity,
    check_degree_system,
    check_extremal_values,
    check_m2_lower_bound,
    check_m2_upper_bound,
    check_maximizer_structure,
    check_zc1star_upper_bound,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SCALE_GUARD",
    "ScaleGuardError",
    "TreeCode",
    "enumerate_trees",
    "format_levels",
    "parse_levels",
    "prufer_oracle",
    "scale_guard_limit",
    "tree_from_levels",
    "FAMILIES",
    "OBJECTIVES",
    "ExtremalResult",
    "brute_force_extremal",
    "classify_max_family",
    "closed_form",
    "construct_family",
    "Graph",
    "build_graph",
    "canonical_tree_code",
    "connection_numbers",
    "degrees",
    "is_complete_graph",
    "is_connected",
    "is_path_graph",
    "is_star_graph",
    "is_tree",
    "is_triangle_and_quadrangle_free",
    "IndexReport",
    "bond_incident_connection",
    "first_connection_zagreb",
    "first_zagreb",
    "first_zagreb_edge",
    "index_report",
    "modified_connection_zagreb",
    "modified_connection_zagreb_edge",
    "partition_counts",
    "second_connection_zagreb",
    "second_zagreb",
    "CHECK_TOKENS",
    "BoundCheck",
    "CheckRecord",
    "StructureCheck",
    "VerificationReport",
    "check_connection_identity",
    "check_degree_system",
    "check_extremal_values",
    "check_m2_lower_bound",
    "check_m2_upper_bound",
    "check_maximizer_structure",
    "check_zc1star_upper_bound",
    "run_suite",
    "__version__",
]
