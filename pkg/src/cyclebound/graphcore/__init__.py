"""Graph model, exact enumeration and bound comparison."""

from .compare import (
    BoundRow,
    CycleBoundReport,
    PathBoundRow,
    PathsBoundCheck,
    check_paths_bound,
    combine,
    cycle_bound_report,
    edge_path_sum,
    path_bound_expr,
    short_cycle_budget,
)
from .counting import PERMANENT_MAX_N, ZeroOneMatrix, count_cycles, count_st_paths, permanent
from .generate import KNOWN_CENSUS, all_graphs_up_to, canonical_word, graphs_on, is_isomorphic
from .graph import Graph, GraphFormatError, parse_graph, read_graph, serialize_graph, write_graph

__all__ = [
    "KNOWN_CENSUS",
    "PERMANENT_MAX_N",
    "BoundRow",
    "CycleBoundReport",
    "Graph",
    "GraphFormatError",
    "PathBoundRow",
    "PathsBoundCheck",
    "ZeroOneMatrix",
    "all_graphs_up_to",
    "canonical_word",
    "check_paths_bound",
    "combine",
    "count_cycles",
    "count_st_paths",
    "cycle_bound_report",
    "edge_path_sum",
    "graphs_on",
    "is_isomorphic",
    "parse_graph",
    "path_bound_expr",
    "permanent",
    "read_graph",
    "serialize_graph",
    "short_cycle_budget",
    "write_graph",
]
