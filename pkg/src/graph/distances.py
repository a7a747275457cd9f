"""Hop distances: all-pairs table and induced-subgraph diameter."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import networkx as nx
import numpy as np

from src.graph.graph import Graph, GraphError

# Strictly larger than any finite hop distance.
UNREACHABLE = np.iinfo(np.int32).max


@dataclass(frozen=True)
class DistanceTable:
    """Read-only ``n x n`` matrix of hop distances."""
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix.setflags(write=False)

    def __call__(self, u: int, v: int) -> int:
        return int(self.matrix[u, v])

    def row(self, v: int) -> np.ndarray:
        return self.matrix[v]

    def is_reachable(self, u: int, v: int) -> bool:
        return self.matrix[u, v] != UNREACHABLE

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def all_pairs_distances(graph: Graph) -> DistanceTable:
    """Exact hop distances via one breadth-first search per source."""
    matrix = np.full((graph.n, graph.n), UNREACHABLE, dtype=np.int32)
    nx_graph = graph.to_networkx()
    for source, lengths in nx.all_pairs_shortest_path_length(nx_graph):
        for target, length in lengths.items():
            matrix[source, target] = length
    return DistanceTable(matrix)


def induced_diameter(graph: Graph, vertices: Iterable[int]) -> int:
    """Diameter of ``G[vertices]``, or ``UNREACHABLE`` if it is disconnected.

    Raises:
        GraphError: If ``vertices`` is empty.
    """
    members = set(vertices)
    if not members:
        raise GraphError("induced_diameter needs a nonempty vertex set")
    sub = nx.Graph()
    sub.add_nodes_from(members)
    sub.add_edges_from(
        (u, w) for u in members for w in graph.adjacency[u] if u < w and w in members
    )
    if not nx.is_connected(sub):
        return UNREACHABLE
    return nx.diameter(sub)
