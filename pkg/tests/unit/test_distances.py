"""Tests for distance tables and induced diameters."""
from __future__ import annotations

import pytest

from src.graph.distances import UNREACHABLE, all_pairs_distances, induced_diameter
from src.graph.graph import Graph, GraphError
from tests.reference import random_graph


def _floyd_warshall(g: Graph) -> list[list[int]]:
    inf = UNREACHABLE
    d = [[0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for via in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][via] + d[via][j] < d[i][j]:
                    d[i][j] = d[i][via] + d[via][j]
    return d


def test_path_distances(p3: Graph) -> None:
    dist = all_pairs_distances(p3)
    assert dist(0, 2) == 2
    assert dist(1, 1) == 0


def test_isolated_vertices_are_unreachable() -> None:
    g = Graph.from_edges([], labels=[1, 2])
    dist = all_pairs_distances(g)
    assert dist(0, 1) == UNREACHABLE
    assert not dist.is_reachable(0, 1)


def test_triangle(k3: Graph) -> None:
    dist = all_pairs_distances(k3)
    assert all(dist(u, v) == 1 for u in range(3) for v in range(3) if u != v)


@pytest.mark.parametrize("seed", range(8))
def test_matches_floyd_warshall(seed: int) -> None:
    g = random_graph(5 + 3 * seed, 0.15, seed=seed)
    dist = all_pairs_distances(g)
    expected = _floyd_warshall(g)
    for u in range(g.n):
        for v in range(g.n):
            assert dist(u, v) == expected[u][v]
            assert dist(u, v) == dist(v, u)


def test_table_is_read_only(p3: Graph) -> None:
    dist = all_pairs_distances(p3)
    with pytest.raises(ValueError):
        dist.matrix[0, 1] = 5


def test_induced_diameter_basic(p4: Graph) -> None:
    assert induced_diameter(p4, {2}) == 0
    assert induced_diameter(p4, {1, 2}) == 1
    assert induced_diameter(p4, {0, 1, 2, 3}) == 3


def test_induced_diameter_ignores_paths_outside_the_set(p3: Graph) -> None:
    assert induced_diameter(p3, {0, 2}) == UNREACHABLE


def test_induced_diameter_empty_set(p3: Graph) -> None:
    with pytest.raises(GraphError):
        induced_diameter(p3, set())


def test_induced_diameter_on_cycle_subsets() -> None:
    cycle = Graph.from_edges([(i, (i + 1) % 6) for i in range(6)], labels=range(6))
    assert induced_diameter(cycle, range(6)) == 3
    assert induced_diameter(cycle, {0, 1, 2, 3}) == 3
    assert induced_diameter(cycle, {5, 0, 1}) == 2
    assert induced_diameter(cycle, {0, 1, 3, 4}) == UNREACHABLE
