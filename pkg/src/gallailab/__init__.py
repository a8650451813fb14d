"""Exact longest paths, 2K2-free recognition and executable proof steps for
the maximum-degree longest-path theorem."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, Path, complement, components, delete_vertex, make_graph, max_degree_vertices
from .graph6 import parse_graph6, write_graph6
from .fixtures import fixture
from .longest import (
    IntersectionReport,
    Method,
    enumerate_longest_paths,
    intersection_of_longest_paths,
    is_longest_path,
    longest_path_order,
)
from .recognizers import TwoK2Witness, find_induced_2k2, is_2k2_free, is_chordal, is_cochordal, split_partition
from .theorem import TheoremReport, Verdict, hunt_counterexamples, verify_max_degree_theorem
