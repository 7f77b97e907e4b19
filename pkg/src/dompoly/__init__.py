"""Exact domination polynomials of small graphs and exact checks of the
counting identities and coefficient conditions that govern their shape."""

__version__ = "0.1.0"

from .analysis import AnalysisReport, analyze, mode_bounds_check, ratio_sequence
from .engine import (
    CapacityError,
    EStatistics,
    domination_polynomial,
    dominator_count,
    e_statistics,
    pair_count,
    split_count,
)
from .graph import (
    Graph,
    GraphError,
    closed_neighborhood,
    dominates,
    is_dominating,
    universal_vertex_count,
)
from .graphio import (
    ParseError,
    construction_graph,
    generate,
    girth,
    parse_edgelist,
    parse_graph6,
    write_graph6,
)
from .kernels import BACKEND

__all__ = [
    "AnalysisReport",
    "BACKEND",
    "CapacityError",
    "EStatistics",
    "Graph",
    "GraphError",
    "ParseError",
    "analyze",
    "closed_neighborhood",
    "construction_graph",
    "dominates",
    "domination_polynomial",
    "dominator_count",
    "e_statistics",
    "generate",
    "girth",
    "is_dominating",
    "mode_bounds_check",
    "pair_count",
    "parse_edgelist",
    "parse_graph6",
    "ratio_sequence",
    "split_count",
    "universal_vertex_count",
    "write_graph6",
]
