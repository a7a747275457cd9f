"""Independent certification of full orderings."""
from __future__ import annotations

from collections.abc import Sequence

from src.graph.graph import Graph


class OrderingError(ValueError):
    """Raised when a sequence is not a permutation of the vertex set."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def check_permutation(graph: Graph, order: Sequence[int]) -> list[int]:
    """Return the position table of ``order``, validating it first."""
    if len(order) != graph.n:
        raise OrderingError(f"ordering has {len(order)} vertices, graph has {graph.n}")
    position = [-1] * graph.n
    for i, v in enumerate(order):
        if not 0 <= v < graph.n:
            raise OrderingError(f"vertex index {v} out of range")
        if position[v] != -1:
            raise OrderingError(f"vertex {graph.labels[v]} appears twice")
        position[v] = i
    return position


def full_wreach_sets(graph: Graph, r: int, order: Sequence[int]) -> list[set[int]]:
    """Weakly ``r``-reachable set of every vertex under a full ordering."""
    position = check_permutation(graph, order)
    sets: list[set[int]] = [{v} for v in range(graph.n)]
    for u in order:
        pos_u = position[u]
        seen = {u}
        frontier = [u]
        for _ in range(r):
            step = []
            for x in frontier:
                for w in graph.adjacency[x]:
                    if w not in seen and position[w] > pos_u:
                        seen.add(w)
                        step.append(w)
            frontier = step
        for v in seen:
            sets[v].add(u)
    return sets


def evaluate_full_ordering(
    graph: Graph, r: int, order: Sequence[int]
) -> tuple[int, int | None]:
    """Return ``(wcol_r(G, L), witness)`` for a full ordering ``L``.

    The witness is the lowest-index vertex attaining the maximum, or ``None``
    for the empty graph.

    Raises:
        OrderingError: If ``order`` is not a permutation of the vertices.
    """
    sets = full_wreach_sets(graph, r, order)
    if not sets:
        return 0, None
    witness = max(range(graph.n), key=lambda v: (len(sets[v]), -v))
    return len(sets[witness]), witness
