"""Shared test fixtures and configuration."""
from __future__ import annotations

import os

import pytest

from src.graph.graph import Graph
from tests.reference import complete_graph, cycle_graph, path_graph


def pytest_collection_modifyitems(config: pytest.Config, items: list[pytest.Item]) -> None:
    if os.environ.get("WCOL_RUN_SLOW", "").strip() in ("1", "true", "yes"):
        return
    skip_slow = pytest.mark.skip(reason="set WCOL_RUN_SLOW=1 to run slow acceptance suites")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def p3() -> Graph:
    """Path a-b-c as indices 0-1-2."""
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    """Path a-b-c-d as indices 0-1-2-3."""
    return path_graph(4)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def star() -> Graph:
    """K_{1,4} with center 0."""
    return Graph.from_edges([(0, leaf) for leaf in range(1, 5)])


@pytest.fixture
def edgeless() -> Graph:
    return Graph.from_edges([], labels=range(4))


@pytest.fixture
def edge_plus_isolated() -> Graph:
    """Edge a-b (0-1) plus isolated z (2)."""
    return Graph.from_edges([(0, 1)], labels=range(3))
