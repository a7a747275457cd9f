"""Tests for the bundled mini-corpus."""
from __future__ import annotations

import pytest

from src.graph.corpus import corpus_names, load_corpus_graph
from src.graph.graph import GraphError


def test_ten_instances() -> None:
    assert len(corpus_names()) == 10


@pytest.mark.parametrize("name", corpus_names())
def test_sizes_in_small_range(name: str) -> None:
    g = load_corpus_graph(name)
    assert 62 <= g.m <= 930


def test_deterministic() -> None:
    first = load_corpus_graph("gnm-150-400")
    second = load_corpus_graph("gnm-150-400")
    assert first.adjacency == second.adjacency


def test_karate() -> None:
    g = load_corpus_graph("karate")
    assert (g.n, g.m) == (34, 78)


def test_unknown_name() -> None:
    with pytest.raises(GraphError, match="unknown corpus instance"):
        load_corpus_graph("nope")
