"""Rank network nodes by non-dominated sorting over centrality indicators
and score ranking algorithms against that benchmark."""

from .analysis import KernelReport, completeness_check, extract_kernel
from .centrality import (
    INDICATOR_NAMES,
    DisconnectedGraphError,
    ScoreTable,
    betweenness,
    closeness,
    degree,
    neighbors_score,
    score_table,
)
from .coverage import CoverageReport, coverage_report, inversion_count, max_distance, sequence_distance
from .datasets import (
    DatasetMissingError,
    fetch_internet_as,
    load_dolphins,
    load_internet_as,
    load_zachary,
)
from .graphio import (
    Graph,
    NormalizationWarning,
    ParseError,
    connected_components,
    induced_subgraph,
    largest_component,
    make_graph,
    parse_edge_list,
    parse_gml,
    read_graph,
    write_graph,
)
from .linkanalysis import (
    RankedSequence,
    hits,
    pagerank,
    parse_score_file,
    ranking_from_scores,
    scores_for_graph,
    to_ranked_sequence,
)
from .pareto import (
    EquivalenceClasses,
    dominates,
    equivalence_classes,
    ordinalize,
    rank_nodes,
)

__version__ = "0.1.0"

__all__ = [
    "CoverageReport",
    "DatasetMissingError",
    "DisconnectedGraphError",
    "EquivalenceClasses",
    "Graph",
    "INDICATOR_NAMES",
    "KernelReport",
    "NormalizationWarning",
    "ParseError",
    "RankedSequence",
    "ScoreTable",
    "betweenness",
    "closeness",
    "completeness_check",
    "connected_components",
    "coverage_report",
    "degree",
    "dominates",
    "equivalence_classes",
    "extract_kernel",
    "fetch_internet_as",
    "hits",
    "induced_subgraph",
    "inversion_count",
    "largest_component",
    "load_dolphins",
    "load_internet_as",
    "load_zachary",
    "make_graph",
    "max_distance",
    "neighbors_score",
    "ordinalize",
    "pagerank",
    "parse_edge_list",
    "parse_gml",
    "parse_score_file",
    "rank_nodes",
    "ranking_from_scores",
    "read_graph",
    "score_table",
    "scores_for_graph",
    "sequence_distance",
    "to_ranked_sequence",
    "write_graph",
    "__version__",
]
