"""Graph representation, parsing, distances and degeneracy."""
from src.graph.degeneracy import degeneracy
from src.graph.distances import UNREACHABLE, DistanceTable, all_pairs_distances, induced_diameter
from src.graph.graph import Graph, GraphError, GraphFormatError, parse_graph, serialize_graph

__all__ = [
    "UNREACHABLE",
    "DistanceTable",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "all_pairs_distances",
    "degeneracy",
    "induced_diameter",
    "parse_graph",
    "serialize_graph",
]
