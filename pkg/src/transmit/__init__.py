"""Exact transmission of composed network topologies.

Two independent engines compute the same quantities: closed formulas over
expression trees (:mod:`transmit.formulas`) and a brute-force BFS oracle
over materialized graphs (:mod:`transmit.graph`, :mod:`transmit.builders`).
Their exact agreement is the package's correctness argument.
"""

from .builders import build_expr, build_primitive
from .dsl import estimated_size, parse, render, validate
from .errors import (
    ConnectivityError,
    InexactDivisionError,
    ResourceLimitError,
    TopologyParseError,
    TransmitError,
    ValidationError,
)
from .formulas import TransmissionTriple, evaluate_expr
from .graph import (
    DEFAULT_VERTEX_CAP,
    DistanceHistogram,
    RootedGraph,
    bfs_distances,
    distance_histogram,
    graph_transmission,
    is_connected,
    root_transmission,
    vertex_transmission,
)
from .metrics import TopologyReport, compare_rank, summarize

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_VERTEX_CAP",
    "ConnectivityError",
    "DistanceHistogram",
    "InexactDivisionError",
    "ResourceLimitError",
    "RootedGraph",
    "TopologyParseError",
    "TopologyReport",
    "TransmissionTriple",
    "TransmitError",
    "ValidationError",
    "bfs_distances",
    "build_expr",
    "build_primitive",
    "compare_rank",
    "distance_histogram",
    "estimated_size",
    "evaluate_expr",
    "graph_transmission",
    "is_connected",
    "parse",
    "render",
    "root_transmission",
    "summarize",
    "validate",
    "vertex_transmission",
    "__version__",
]
