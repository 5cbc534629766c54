"""Minimum temporal-inefficiency subgraphs around query vertices.

Distances blend hop count and elapsed time (alpha*hops + (1-alpha)*duration
over time-respecting paths); the inefficiency of a vertex set averages
1 - alpha/d over ordered pairs inside its induced subgraph. Solving a window
builds a Steiner connector around the query set in a time-expanded graph and
greedily peels it down; a sliding-window engine adapts the query set between
windows.
"""

from ._kernel import ACTIVE_BACKEND
from .errors import DataError, ParseError, TempocError
from .graph import TemporalGraph, Window, induce, load_edges, load_snapshot_dir, project
from .inefficiency import InefficiencyValue, inefficiency, removal_gain
from .search import Solution, greedy_peel, solve
from .sfp import DistanceMap, DistanceMatrix, all_pairs, sfp_distance, sssp
from .steiner import Connector, MetricClosure, SteinerTree, build_connector, lazy_closure, min_dst
from .stream import AdaptiveConfig, QueryState, WindowBuffer, run_stream, step
from .transform import Node, TransformedGraph, build, path_cost, replica, sink, source, temporal_path, to_dot

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_BACKEND",
    "AdaptiveConfig",
    "Connector",
    "DataError",
    "DistanceMap",
    "DistanceMatrix",
    "InefficiencyValue",
    "MetricClosure",
    "Node",
    "ParseError",
    "QueryState",
    "Solution",
    "SteinerTree",
    "TemporalGraph",
    "TempocError",
    "TransformedGraph",
    "Window",
    "WindowBuffer",
    "all_pairs",
    "build",
    "build_connector",
    "greedy_peel",
    "induce",
    "inefficiency",
    "lazy_closure",
    "load_edges",
    "load_snapshot_dir",
    "min_dst",
    "path_cost",
    "project",
    "removal_gain",
    "replica",
    "run_stream",
    "sfp_distance",
    "sink",
    "solve",
    "source",
    "sssp",
    "step",
    "temporal_path",
    "to_dot",
    "__version__",
]
