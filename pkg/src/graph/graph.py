"""Immutable undirected graph with dense vertex indices, plus edge-list I/O.

Vertices are addressed internally by indices ``0..n-1``; ``labels`` maps each
index back to the integer label used in the input file.
"""
from __future__ import annotations

import bisect
import logging
from collections.abc import Iterable
from dataclasses import dataclass, field

import networkx as nx

logger = logging.getLogger(__name__)

_COMMENT_PREFIXES = ("#", "c", "%")


class GraphError(ValueError):
    """Raised for invalid graph construction or queries."""


class GraphFormatError(GraphError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Undirected loop-free graph.

    Attributes:
        adjacency: Sorted neighbor tuple per vertex index
        labels: Original integer label per vertex index
    """
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False)
    _m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != len(self.labels):
            raise GraphError("adjacency and labels must have the same length")
        index = {label: i for i, label in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise GraphError("labels must be distinct")
        degree_sum = 0
        for v, neighbors in enumerate(self.adjacency):
            for w in neighbors:
                if w == v:
                    raise GraphError(f"self-loop at vertex {self.labels[v]}")
            degree_sum += len(neighbors)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_m", degree_sum // 2)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return self._m

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_label(self, label: int) -> bool:
        return label in self._index

    def index_of(self, label: int) -> int:
        """Return the internal index of an original label."""
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label}") from None

    def has_edge(self, u: int, v: int) -> bool:
        neighbors = self.adjacency[u]
        i = bisect.bisect_left(neighbors, v)
        return i < len(neighbors) and neighbors[i] == v

    def edges(self) -> list[tuple[int, int]]:
        """Return every edge once as ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[int] | None = None,
    ) -> Graph:
        """Build a graph from label pairs.

        Vertices receive indices in first-seen order: first the explicit
        ``labels`` (if any), then labels as they appear in ``edges``.
        Duplicate edges are merged; self-loops raise ``GraphError``.
        """
        index: dict[int, int] = {}
        order: list[int] = []

        def intern(label: int) -> int:
            if label not in index:
                index[label] = len(order)
                order.append(label)
            return index[label]

        for label in labels or ():
            intern(label)
        neighbor_sets: list[set[int]] = []
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            u, v = intern(a), intern(b)
            while len(neighbor_sets) < len(order):
                neighbor_sets.append(set())
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        while len(neighbor_sets) < len(order):
            neighbor_sets.append(set())
        adjacency = tuple(tuple(sorted(ns)) for ns in neighbor_sets)
        return cls(adjacency=adjacency, labels=tuple(order))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Graph:
        """Convert a networkx graph whose nodes are integers (or relabelable)."""
        nodes = list(graph.nodes)
        if not all(isinstance(node, int) for node in nodes):
            graph = nx.convert_node_labels_to_integers(graph, first_label=1, ordering="sorted")
            nodes = list(graph.nodes)
        return cls.from_edges(graph.edges, labels=nodes)

    def to_networkx(self) -> nx.Graph:
        """Return a networkx graph on internal indices."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def induced_subgraph_networkx(self, vertices: Iterable[int]) -> nx.Graph:
        return self.to_networkx().subgraph(vertices).copy()


def parse_graph(text: str) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#``, ``c`` or ``%`` are comments. An optional header
    ``p <n> <m>`` (or DIMACS ``p edge <n> <m>``) declares the vertex count;
    with a header the vertex set is ``1..n`` (``0..n-1`` if label 0 occurs)
    so isolated vertices are kept. A line holding a single label declares
    that vertex, which lets headerless files carry isolated vertices.
    """
    header: tuple[int, int, int] | None = None  # (n, m, line)
    edges: list[tuple[int, int]] = []
    seen: list[int] = []
    seen_set: set[int] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError("duplicate header", line_no)
            numbers = tokens[2:] if len(tokens) == 4 else tokens[1:]
            if len(numbers) != 2:
                raise GraphFormatError("header must be 'p <n> <m>'", line_no)
            n, m = (_parse_int(tok, line_no) for tok in numbers)
            if n < 0 or m < 0:
                raise GraphFormatError("header counts must be nonnegative", line_no)
            header = (n, m, line_no)
            continue
        if tokens[0] == "e" and len(tokens) == 3:
            tokens = tokens[1:]
        if len(tokens) == 1:
            labels_on_line: tuple[int, ...] = (_parse_int(tokens[0], line_no),)
        elif len(tokens) == 2:
            a, b = (_parse_int(tok, line_no) for tok in tokens)
            if a == b:
                raise GraphFormatError(f"self-loop at vertex {a}", line_no)
            edges.append((a, b))
            labels_on_line = (a, b)
        else:
            raise GraphFormatError(f"expected 'u v', got {line!r}", line_no)
        for label in labels_on_line:
            if label not in seen_set:
                seen_set.add(label)
                seen.append(label)

    labels: list[int] = list(seen)
    if header is not None:
        n, m, header_line = header
        base = 0 if 0 in seen_set else 1
        allowed = range(base, base + n)
        for label in seen:
            if label not in allowed:
                raise GraphFormatError(
                    f"vertex {label} outside the {n} vertices declared by the header",
                    header_line,
                )
        labels.extend(label for label in allowed if label not in seen_set)

    graph = Graph.from_edges(edges, labels=labels)
    if header is not None and header[1] != graph.m:
        logger.warning(
            "header declares %d edges, found %d distinct edges", header[1], graph.m
        )
    logger.debug("parsed graph with n=%d m=%d", graph.n, graph.m)
    return graph


def serialize_graph(graph: Graph) -> str:
    """Serialize as sorted ``u v`` label lines that ``parse_graph`` reads back.

    The ``p n m`` header is written only when the labels are exactly
    ``1..n``; any other label set is written headerless, with each isolated
    vertex on a line of its own.
    """
    pairs = sorted(
        tuple(sorted((graph.labels[u], graph.labels[v]))) for u, v in graph.edges()
    )
    lines: list[str] = []
    if set(graph.labels) == set(range(1, graph.n + 1)):
        lines.append(f"p {graph.n} {graph.m}")
        isolated: list[int] = []
    else:
        isolated = sorted(graph.labels[v] for v in range(graph.n) if graph.degree(v) == 0)
    lines.extend(f"{a} {b}" for a, b in pairs)
    lines.extend(str(label) for label in isolated)
    return "\n".join(lines) + "\n"


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"non-integer token {token!r}", line_no) from None
