"""Tests for the exact oracle."""
from __future__ import annotations

import pytest

from src.graph.degeneracy import degeneracy
from src.graph.graph import Graph
from src.oracle.exact import OracleLimitError, exact_wcol, exact_wcol_bruteforce
from src.ordering.evaluate import evaluate_full_ordering
from tests.reference import complete_graph, path_graph, random_graph


@pytest.mark.parametrize("n", [1, 2, 3, 5])
@pytest.mark.parametrize("r", [1, 3])
def test_complete_graph(n: int, r: int) -> None:
    assert exact_wcol(complete_graph(n), r)[0] == n


def test_single_vertex() -> None:
    assert exact_wcol(Graph.from_edges([], labels=[7]), 2) == (1, [0])


def test_empty_graph() -> None:
    assert exact_wcol(Graph.from_edges([]), 2) == (0, [])


def test_path_of_four(p4: Graph) -> None:
    assert exact_wcol(p4, 1)[0] == 2
    assert exact_wcol(p4, 2)[0] == 3


def test_edgeless(edgeless: Graph) -> None:
    assert exact_wcol(edgeless, 5)[0] == 1


def test_returned_ordering_attains_value() -> None:
    g = random_graph(7, 0.5, seed=4)
    value, order = exact_wcol(g, 2)
    assert evaluate_full_ordering(g, 2, order)[0] == value


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("seed", range(10))
def test_matches_bruteforce(r: int, seed: int) -> None:
    g = random_graph(6, 0.45, seed=seed)
    assert exact_wcol(g, r)[0] == exact_wcol_bruteforce(g, r)[0]


@pytest.mark.parametrize("seed", range(10))
def test_radius_one_is_degeneracy_plus_one(seed: int) -> None:
    g = random_graph(8, 0.4, seed=seed)
    assert exact_wcol(g, 1)[0] == degeneracy(g)[0] + 1


def test_limits() -> None:
    with pytest.raises(OracleLimitError):
        exact_wcol(path_graph(10), 2, limit=9)
    with pytest.raises(OracleLimitError):
        exact_wcol_bruteforce(path_graph(8), 2)
    assert exact_wcol(path_graph(10), 1, limit=10)[0] == 2
