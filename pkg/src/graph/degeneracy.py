"""Degeneracy via repeated removal of a minimum-degree vertex."""
from __future__ import annotations

import heapq

from src.graph.graph import Graph


def degeneracy(graph: Graph) -> tuple[int, list[int]]:
    """Return ``(degeneracy, elimination order)``.

    The vertex removed at each step has minimum residual degree, ties broken
    by ascending index. Reversing the elimination order gives an ordering
    whose weak 1-coloring number is ``degeneracy + 1``.
    """
    residual = [graph.degree(v) for v in range(graph.n)]
    removed = [False] * graph.n
    heap = [(residual[v], v) for v in range(graph.n)]
    heapq.heapify(heap)

    value = 0
    order: list[int] = []
    while heap:
        deg, v = heapq.heappop(heap)
        if removed[v] or deg != residual[v]:
            continue  # stale entry
        removed[v] = True
        order.append(v)
        value = max(value, deg)
        for w in graph.adjacency[v]:
            if not removed[w]:
                residual[w] -= 1
                heapq.heappush(heap, (residual[w], w))
    return value, order
