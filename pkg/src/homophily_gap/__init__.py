"""Homophily-gap analysis for two-type undirected networks.

The package measures first-order homophily (the fraction of a node's
neighbors sharing its type), the two second-order variants built on top of
it, and the gap between the second-order means experienced across same- and
cross-type edges.  It also generates typed random graphs with prescribed
homophily distributions, prunes graphs down to their bichromatic core, and
runs parameter sweeps that compare measured gaps to a closed-form
prediction.
"""

from homophily_gap.estimators import (
    BichromaticPruner,
    DoubleConfigurationModel,
    HomophilyGapAnalyzer,
    check_typed_graph,
)
from homophily_gap.experiments import (
    EmpiricalBatchResult,
    EmpiricalRow,
    SweepRow,
    SweepTable,
    empirical_batch,
    histogram,
    histogram_svg,
    predicted_gap,
    sweep_lambda_sigma,
    sweep_sigma,
)
from homophily_gap.generate import (
    ConfigModelSpec,
    GenerationError,
    GenerationReport,
    InfeasibleSpecError,
    derive_blue_degree,
    derived_rng,
    double_configuration_model,
    special_case_graph,
    verification_suite,
)
from homophily_gap.graph import (
    BLUE,
    RED,
    GraphInputError,
    NodeColor,
    TypedGraph,
    ValidationReport,
    build_graph,
    count_edges_between,
    load_graph,
    read_attributes,
    read_edge_list,
    validate,
    write_attributes,
    write_edge_list,
)
from homophily_gap.metrics import (
    EXACT,
    FLOAT,
    BalanceCheck,
    ColorGapReport,
    FriendshipParadoxStats,
    GapReport,
    HomophilyProfile,
    SecondVsFirst,
    StatValue,
    TheoremViolationError,
    balance_check,
    first_order_homophily,
    friendship_paradox_stats,
    gap_report,
    pearson,
    second_order_list,
    second_order_singular,
    second_vs_first,
    verify_gap_theorem,
)
from homophily_gap.prune import (
    PruneResult,
    RetentionStats,
    drop_isolated,
    prune_bichromatic,
    retention_stats,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph
    "NodeColor",
    "RED",
    "BLUE",
    "GraphInputError",
    "TypedGraph",
    "ValidationReport",
    "build_graph",
    "validate",
    "count_edges_between",
    "load_graph",
    "read_edge_list",
    "read_attributes",
    "write_edge_list",
    "write_attributes",
    # metrics
    "EXACT",
    "FLOAT",
    "StatValue",
    "HomophilyProfile",
    "ColorGapReport",
    "GapReport",
    "BalanceCheck",
    "SecondVsFirst",
    "FriendshipParadoxStats",
    "TheoremViolationError",
    "first_order_homophily",
    "second_order_list",
    "second_order_singular",
    "gap_report",
    "balance_check",
    "second_vs_first",
    "friendship_paradox_stats",
    "pearson",
    "verify_gap_theorem",
    # prune
    "PruneResult",
    "RetentionStats",
    "prune_bichromatic",
    "drop_isolated",
    "retention_stats",
    # generate
    "ConfigModelSpec",
    "GenerationError",
    "GenerationReport",
    "InfeasibleSpecError",
    "derive_blue_degree",
    "derived_rng",
    "double_configuration_model",
    "special_case_graph",
    "verification_suite",
    # experiments
    "predicted_gap",
    "SweepRow",
    "SweepTable",
    "sweep_sigma",
    "sweep_lambda_sigma",
    "EmpiricalRow",
    "EmpiricalBatchResult",
    "empirical_batch",
    "histogram",
    "histogram_svg",
    # estimators
    "HomophilyGapAnalyzer",
    "BichromaticPruner",
    "DoubleConfigurationModel",
    "check_typed_graph",
]
