"""
Property regression suites.

Each class checks one exact property against an independent reference:
the exact oracle, a rebuild from scratch, or exhaustive enumeration. The
fast variants run on every test invocation; the ``slow`` variants repeat
them on the full sample sizes and only run with WCOL_RUN_SLOW=1.
"""
from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from src.bounds.mmd_plus import wcol_mmd_plus
from src.driver.config import RunConfig
from src.driver.optimizer import optimize
from src.graph.degeneracy import degeneracy
from src.graph.distances import all_pairs_distances
from src.graph.graph import Graph
from src.oracle.exact import exact_wcol
from src.ordering.evaluate import evaluate_full_ordering
from src.ordering.rl_state import RLState
from src.ordering.state import OrderState
from src.turbo.base import Deadline, SearchCounter
from src.turbo.ic import turbocharge_ic
from src.turbo.merge import MergeInstance, breakpoints_of, recursive_merge
from src.turbo.rl import turbocharge_rl
from tests.reference import (
    extendable,
    interleavings,
    random_connected_graph,
    random_graph,
    sub_wreach,
)

TURBO_CONFIGS = [("degree-lr", "ic"), ("wreach", "merge"), ("sreach", "ic-rl")]


def _tiny_connected(seed: int) -> Graph:
    rng = random.Random(seed)
    return random_connected_graph(rng.randint(2, 6), rng.uniform(0.3, 0.8), seed=seed)


def _check_oracle_agreement(seed: int) -> None:
    g = _tiny_connected(seed)
    for r in (1, 2, 3):
        optimum = exact_wcol(g, r)[0]
        for heuristic, turbo in TURBO_CONFIGS:
            result = optimize(g, RunConfig(r=r, heuristic=heuristic, turbo=turbo, timeout=None, seed=seed))
            assert result.k == optimum, (seed, r, heuristic, turbo)


class TestOracleAgreement:
    """Turbocharged runs without a time budget reach the exact optimum."""

    @pytest.mark.parametrize("seed", range(25))
    def test_tiny_connected_graphs(self, seed: int) -> None:
        _check_oracle_agreement(seed)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(25, 525))
    def test_full_sample(self, seed: int) -> None:
        _check_oracle_agreement(seed)


class TestRadiusOneIdentity:
    """The reversed degeneracy elimination order certifies ``degeneracy + 1``."""

    @pytest.mark.parametrize("seed", range(200))
    def test_reversed_elimination_order(self, seed: int) -> None:
        rng = random.Random(seed)
        g = random_graph(rng.randint(1, 50), rng.uniform(0.02, 0.3), seed=seed)
        value, elimination = degeneracy(g)
        assert evaluate_full_ordering(g, 1, elimination[::-1])[0] == value + 1


class TestMonotonicityAndRebuild:
    """Placed wreach sets only grow, and incremental state equals a rebuild."""

    @pytest.mark.parametrize("seed", range(200))
    def test_random_placement_sequences(self, seed: int) -> None:
        rng = random.Random(seed)
        n = rng.randint(1, 12)
        g = random_graph(n, rng.uniform(0.1, 0.6), seed=seed)
        r = rng.randint(1, 4)
        st = OrderState(g, r=r, k=n)
        sequence = list(range(n))
        rng.shuffle(sequence)
        previous = [set() for _ in range(n)]
        for v in sequence:
            st.place_back(v)
            placed = set(st.order)
            current = [st.wreach[u] & placed for u in range(n)]
            assert all(previous[u] <= current[u] for u in range(n))
            previous = current
        rebuilt = OrderState(g, r=r, k=n)
        for v in st.order:
            rebuilt.place_back(v)
        assert rebuilt.signature() == st.signature()
        if st.order:
            victim = rng.choice(st.order)
            st.remove_at(victim)
            fresh = OrderState(g, r=r, k=n)
            for v in st.order:
                fresh.place_back(v)
            assert fresh.signature() == st.signature()

    @pytest.mark.parametrize("seed", range(50))
    def test_potsreach_grows_under_left_extension(self, seed: int) -> None:
        rng = random.Random(seed)
        n = rng.randint(1, 12)
        g = random_graph(n, rng.uniform(0.1, 0.6), seed=seed)
        st = RLState(g, r=rng.randint(1, 4), k=n)
        sequence = list(range(n))
        rng.shuffle(sequence)
        previous: dict[int, set[int]] = {}
        for v in sequence:
            st.prepend(v)
            for u in st.order:
                assert previous.get(u, set()) <= st.potsreach_of(u)
            previous = {u: st.potsreach_of(u) for u in st.order}


def _random_triple(seed: int, max_n: int, max_r: int) -> tuple[Graph, int, list[int], int]:
    rng = random.Random(seed)
    n = rng.randint(2, max_n)
    g = random_graph(n, rng.uniform(0.2, 0.7), seed=seed)
    vertices = list(range(n))
    rng.shuffle(vertices)
    v = vertices[0]
    s1 = vertices[1 : rng.randint(2, n)]
    return g, rng.randint(1, max_r), s1, v


def _check_breakpoint_laws(g: Graph, r: int, s1: list[int], v: int) -> None:
    inst = MergeInstance(g, r=r, k=g.n, s1=tuple(s1), s2=(v,))
    breakpoints = breakpoints_of(inst, v, limit=len(s1))
    # changing side of s matters exactly at breakpoints
    for i, s in enumerate(s1):
        before = sub_wreach(g, r, [*s1[:i], v, *s1[i:]])
        after = sub_wreach(g, r, [*s1[: i + 1], v, *s1[i + 1 :]])
        assert (before != after) == (s in breakpoints), (s1, v, s)
    # the placed part of wreach(v) is the set of breakpoints left of v
    for i in range(len(s1) + 1):
        order = [*s1[:i], v, *s1[i:]]
        left = set(s1[:i])
        assert sub_wreach(g, r, order)[v] - {v} == {b for b in breakpoints if b in left}


def _atlas_graphs(n: int) -> list[Graph]:
    """Every graph on ``n`` vertices, one per isomorphism class."""
    return [
        Graph.from_edges(h.edges, labels=range(n))
        for h in nx.graph_atlas_g()
        if h.number_of_nodes() == n
    ]


def _check_breakpoint_laws_exhaustively(g: Graph, r: int) -> None:
    for v in range(g.n):
        others = [w for w in range(g.n) if w != v]
        for size in range(len(others) + 1):
            for s1 in itertools.permutations(others, size):
                _check_breakpoint_laws(g, r, list(s1), v)


class TestBreakpointLaws:
    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_graphs_up_to_four_vertices(self, n: int, r: int) -> None:
        for g in _atlas_graphs(n):
            _check_breakpoint_laws_exhaustively(g, r)

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_all_graphs_on_five_vertices(self, r: int) -> None:
        graphs = _atlas_graphs(5)
        assert len(graphs) == 34
        for g in graphs:
            _check_breakpoint_laws_exhaustively(g, r)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(1000))
    def test_larger_triples(self, seed: int) -> None:
        _check_breakpoint_laws(*_random_triple(seed, max_n=9, max_r=4))


def _check_merge_completeness(seed: int) -> None:
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    g = random_graph(n, rng.uniform(0.2, 0.6), seed=seed)
    r = rng.randint(1, 3)
    k = rng.randint(1, 4)
    vertices = list(range(n))
    rng.shuffle(vertices)
    s2 = vertices[: rng.randint(1, min(3, n))]
    rest = vertices[len(s2) :]
    s1 = rest[: rng.randint(0, len(rest))]
    counter = SearchCounter(len(s2))
    merged = recursive_merge(MergeInstance(g, r=r, k=k, s1=tuple(s1), s2=tuple(s2)), counter=counter)
    exists = any(extendable(g, r, k, order) for order in interleavings(s1, s2))
    assert (merged is not None) == exists
    assert counter.max_branching <= k + 1


class TestMergeCompleteness:
    @pytest.mark.parametrize("seed", range(100, 300))
    def test_random_instances(self, seed: int) -> None:
        _check_merge_completeness(seed)


class TestLowerBoundSoundness:
    @pytest.mark.parametrize("seed", range(30))
    def test_never_above_optimum(self, seed: int) -> None:
        rng = random.Random(seed)
        g = random_graph(rng.randint(1, 7), rng.uniform(0.2, 0.8), seed=seed)
        for r in range(1, 6):
            assert wcol_mmd_plus(g, r) <= exact_wcol(g, r)[0]
        assert wcol_mmd_plus(g, 1) == wcol_mmd_plus(g, 2) == degeneracy(g)[0] + 1


class TestRestorationAndDeterminism:
    @pytest.mark.parametrize("seed", range(20))
    def test_failed_invocations_leave_state_unchanged(self, seed: int) -> None:
        rng = random.Random(seed)
        g = random_graph(rng.randint(4, 9), 0.5, seed=seed)
        dist = all_pairs_distances(g)
        r = rng.randint(1, 3)

        st = OrderState(g, r=r, k=2)
        for v in range(g.n):
            st.place_back(v)
        before = st.signature()
        if not turbocharge_ic(st, 1, dist, Deadline()):
            assert st.signature() == before

        rl = RLState(g, r=r, k=2)
        for v in range(g.n):
            rl.prepend(v)
        before = rl.signature()
        if not turbocharge_rl(rl, 1, dist, Deadline()):
            assert rl.signature() == before

    @pytest.mark.parametrize(("heuristic", "turbo"), TURBO_CONFIGS)
    def test_fixed_seed_reproduces_order(self, heuristic: str, turbo: str) -> None:
        g = random_connected_graph(9, 0.35, seed=17)
        cfg = RunConfig(r=3, heuristic=heuristic, turbo=turbo, timeout=None, seed=5)
        assert optimize(g, cfg).order == optimize(g, cfg).order
