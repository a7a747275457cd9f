"""Tests for the right-to-left repair search."""
from __future__ import annotations

import itertools
import random

import pytest

from src.driver.stats import RunStats
from src.graph.distances import all_pairs_distances
from src.graph.graph import Graph
from src.ordering.rl_state import RLState
from src.turbo.base import Deadline, SearchTimeout
from src.turbo.rl import turbocharge_rl
from tests.reference import potsreach, random_graph


def _rl_extendable(g: Graph, r: int, k: int, order: list[int]) -> bool:
    return all(len(s) <= k for s in potsreach(g, r, order).values())


def test_replaces_leftmost_vertex(edge_plus_isolated: Graph) -> None:
    st = RLState(edge_plus_isolated, r=1, k=1)
    st.prepend(1)
    assert not st.is_extendable()
    stats = RunStats()
    assert turbocharge_rl(st, 1, all_pairs_distances(edge_plus_isolated), Deadline(), stats)
    assert list(st.order) == [2]
    assert stats.invocations[0].kind == "ic-rl"
    assert stats.invocations[0].success


def test_failure_restores_state(k3: Graph) -> None:
    st = RLState(k3, r=1, k=2)
    for v in range(3):
        st.prepend(v)
    before = st.signature()
    stats = RunStats()
    assert not turbocharge_rl(st, 1, all_pairs_distances(k3), Deadline(), stats)
    assert st.signature() == before
    assert stats.cnt_tc == 1


def test_large_k_always_succeeds(p4: Graph) -> None:
    st = RLState(p4, r=3, k=4)
    st.prepend(3)
    st.prepend(2)
    assert turbocharge_rl(st, 2, all_pairs_distances(p4), Deadline())
    assert len(st.order) == 2


def test_rejects_nonpositive_c(p3: Graph) -> None:
    with pytest.raises(ValueError):
        turbocharge_rl(RLState(p3, r=1, k=1), 0, all_pairs_distances(p3), Deadline())


def test_timeout_restores_state(k4: Graph) -> None:
    st = RLState(k4, r=1, k=3)
    for v in range(4):
        st.prepend(v)
    before = st.signature()
    with pytest.raises(SearchTimeout):
        turbocharge_rl(st, 4, all_pairs_distances(k4), Deadline(0.0))
    assert st.signature() == before


@pytest.mark.parametrize("seed", range(20))
def test_exhaustive_on_tiny_instances(seed: int) -> None:
    rng = random.Random(seed)
    n = rng.randint(3, 8)
    g = random_graph(n, rng.uniform(0.25, 0.6), seed=seed)
    r = rng.randint(1, 3)
    k = rng.randint(1, 3)
    st = RLState(g, r=r, k=k)
    sequence = list(range(n))
    rng.shuffle(sequence)
    for v in sequence:
        st.prepend(v)
        if not st.is_extendable():
            break
    if st.is_extendable():
        pytest.skip("random sequence never went over k")
    c = rng.randint(1, 3)
    m = min(c, len(st.order))
    suffix = list(st.order)[m:]
    rest = [v for v in range(n) if v not in suffix]
    expected = _rl_extendable(g, r, k, suffix) and any(
        _rl_extendable(g, r, k, [*head, *suffix]) for head in itertools.permutations(rest, m)
    )
    before = st.signature()
    ok = turbocharge_rl(st, c, all_pairs_distances(g), Deadline())
    assert ok == expected
    if ok:
        assert st.is_extendable()
        assert list(st.order)[m:] == suffix
    else:
        assert st.signature() == before
