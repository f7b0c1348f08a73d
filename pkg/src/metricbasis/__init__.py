"""Exact metric dimension, metric-basis enumeration and vertex roles for small graphs."""

from .errors import *  # noqa: F401,F403
from .graph import (
    Graph, complement, complete_graph, cycle_graph, from_edge_list, from_labelled_edges,
    load_graph, path_graph, star_graph,
)
from .resolver import (
    ResolvingAnalysis, Role, analyze, build_pair_system, classify_vertices,
    enumerate_metric_bases, is_resolving, metric_dimension, unresolved_pairs,
)
from .colour import ColourGraph, build_colour_graph
from .theorems import TheoremReport, run_all

__version__ = "0.1.0"
