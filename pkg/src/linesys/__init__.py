"""Lines induced by betweenness relations.

Graphs, posets, finite metric spaces, and 3-uniform hypergraphs all
compile into one betweenness abstraction; this package computes their
line systems, evaluates the height-dependent lower bound for posets,
builds recheckable certificates for it, and verifies the bounds
exhaustively on all small instances.
"""

from .bounds import dbe_bound, min_pair_sum
from .construct import (
    LineCertificate,
    ProcessStep,
    StepKind,
    build_certificate,
    certificate_issues,
)
from .core import (
    BetweennessRelation,
    GroundSet,
    Line,
    LineEntry,
    LineSystem,
    all_lines,
    find_universal_line,
    has_universal_line,
    hypergraph_relation,
    line_mask_set,
    line_of,
    nested_entries,
    overlapping_entries,
    pair_list,
)
from .enumeration import (
    enumerate_graphs,
    enumerate_posets,
    graph_from_mask,
    poset_code,
    poset_from_code,
)
from .errors import (
    CapError,
    CycleError,
    DisconnectedError,
    DomainError,
    HeightError,
    IdenticalPointsError,
    InternalError,
    LinesysError,
    MalformedEdgeError,
    MetricError,
    ParseError,
    SizeError,
    UniversalLineError,
    UnknownPointError,
)
from .formats import (
    parse_graph,
    parse_hypergraph,
    parse_metric,
    parse_poset,
    render_line_system,
)
from .graphs import (
    Graph,
    graph_betweenness,
    graph_has_universal_line,
    graph_universal_line,
    is_extremal_graph,
    universal_vertices,
)
from .metrics import MetricSpace, graph_shortest_path_metric, metric_betweenness
from .posets import (
    AntichainPartition,
    Poset,
    comparability_graph,
    is_extremal_poset,
    maximum_chain_through_levels,
    mirsky_partition,
    poset_betweenness,
)
from .sweeps import (
    PairSumSweepSummary,
    SweepSummary,
    VerificationReport,
    graph_report,
    iter_reports,
    metric_report,
    pair_sum_sweep,
    poset_report,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "AntichainPartition",
    "BetweennessRelation",
    "CapError",
    "CycleError",
    "DisconnectedError",
    "DomainError",
    "Graph",
    "GroundSet",
    "HeightError",
    "IdenticalPointsError",
    "InternalError",
    "Line",
    "LineCertificate",
    "LineEntry",
    "LineSystem",
    "LinesysError",
    "MalformedEdgeError",
    "MetricError",
    "MetricSpace",
    "PairSumSweepSummary",
    "ParseError",
    "Poset",
    "ProcessStep",
    "SizeError",
    "StepKind",
    "SweepSummary",
    "UniversalLineError",
    "UnknownPointError",
    "VerificationReport",
    "all_lines",
    "build_certificate",
    "certificate_issues",
    "comparability_graph",
    "dbe_bound",
    "enumerate_graphs",
    "enumerate_posets",
    "find_universal_line",
    "graph_betweenness",
    "graph_from_mask",
    "graph_has_universal_line",
    "graph_report",
    "graph_shortest_path_metric",
    "graph_universal_line",
    "has_universal_line",
    "hypergraph_relation",
    "is_extremal_graph",
    "is_extremal_poset",
    "iter_reports",
    "line_mask_set",
    "line_of",
    "maximum_chain_through_levels",
    "metric_betweenness",
    "metric_report",
    "mirsky_partition",
    "min_pair_sum",
    "nested_entries",
    "overlapping_entries",
    "pair_list",
    "pair_sum_sweep",
    "parse_graph",
    "parse_hypergraph",
    "parse_metric",
    "parse_poset",
    "poset_betweenness",
    "poset_code",
    "poset_from_code",
    "poset_report",
    "render_line_system",
    "run_sweep",
    "universal_vertices",
]
