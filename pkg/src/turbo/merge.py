"""Merge a vertex set back into a subordering.

A subset ``S2`` is taken out of the subordering; the remaining subordering
of ``S1`` is kept in place and the vertices of ``S2`` are interleaved into
it by a bounded search. Only positions directly before one of the ``k``
leftmost breakpoints of a vertex, or the right end, need to be tried.
"""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field

from src.driver.stats import RunStats, TurboInvocation
from src.graph.graph import Graph
from src.ordering.state import OrderState
from src.turbo.base import Deadline, SearchCounter

logger = logging.getLogger(__name__)


class MergeError(ValueError):
    """Raised for malformed merge instances."""


@dataclass(frozen=True)
class MergeInstance:
    """Partition ``S1`` (ordered) / ``S2`` (to merge) / ``T`` (free) of V(G)."""
    graph: Graph
    r: int
    k: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    t: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        in_s1 = set(self.s1)
        in_s2 = set(self.s2)
        if len(in_s1) != len(self.s1) or len(in_s2) != len(self.s2):
            raise MergeError("S1 and S2 must not repeat vertices")
        if in_s1 & in_s2:
            raise MergeError("S1 and S2 must be disjoint")
        t = tuple(v for v in range(self.graph.n) if v not in in_s1 and v not in in_s2)
        object.__setattr__(self, "s2", tuple(sorted(in_s2)))
        object.__setattr__(self, "t", t)

    def build_state(self) -> OrderState:
        """State of ``L_S1`` in ``G - S2``."""
        st = OrderState(self.graph, self.r, self.k, inactive=self.s2)
        for v in self.s1:
            st.place_back(v)
        return st


def breakpoints_of(inst: MergeInstance, v: int, limit: int | None = None) -> list[int]:
    """Leftmost ``limit`` (default ``k``) breakpoints of ``v`` in ``G[S1 + T + v]``."""
    if v not in inst.s2:
        raise MergeError(f"vertex {v} is not in S2")
    return _breakpoints(inst.build_state(), v, inst.k if limit is None else limit)


def _breakpoints(st: OrderState, v: int, limit: int) -> list[int]:
    found: list[int] = []
    after = -1
    while len(found) < limit:
        reached = st.probe_reach(v, after)
        nxt = min(
            (st.position(w) for w in reached if st.position(w) > after),
            default=None,
        )
        if nxt is None:
            break
        found.append(st.order[nxt])
        after = nxt
    return found


def recursive_merge(
    inst: MergeInstance,
    deadline: Deadline | None = None,
    stats: RunStats | None = None,
    counter: SearchCounter | None = None,
) -> list[int] | None:
    """Return an extendable subordering of ``S1 + S2`` keeping ``L_S1``, or ``None``.

    ``None`` means no such interleaving exists. Raises ``SearchTimeout`` when
    ``deadline`` expires.
    """
    deadline = deadline or Deadline()
    counter = counter or SearchCounter(max(len(inst.s2), 1))
    st = inst.build_state()
    forced = _forced_members(inst)
    remaining = set(inst.s2)

    started = time.perf_counter()
    result = None
    try:
        result = _merge(st, remaining, forced, deadline, counter, 1)
    finally:
        invocation = TurboInvocation(
            "merge",
            counter.c,
            counter.nodes,
            counter.max_depth,
            result is not None,
            time.perf_counter() - started,
        )
        if stats is not None:
            stats.record_invocation(invocation)
    return result


def _forced_members(inst: MergeInstance) -> dict[int, set[int]]:
    """For each ``u`` in S2, the T-vertices within ``r`` of ``u`` inside ``G[T + u]``.

    Once ``u`` is placed it is weakly reachable from all of them.
    """
    in_t = set(inst.t)
    forced: dict[int, set[int]] = {}
    for u in inst.s2:
        seen = {u}
        frontier = [u]
        for _ in range(inst.r):
            step = [w for x in frontier for w in inst.graph.adjacency[x] if w in in_t and w not in seen]
            seen.update(step)
            frontier = step
        seen.discard(u)
        forced[u] = seen
    return forced


def _forced_overflow(st: OrderState, remaining: set[int], forced: dict[int, set[int]]) -> bool:
    pending: dict[int, int] = {}
    for u in remaining:
        for t in forced[u]:
            pending[t] = pending.get(t, 0) + 1
    return any(len(st.wreach[t]) + extra > st.k for t, extra in pending.items())


def _merge(
    st: OrderState,
    remaining: set[int],
    forced: dict[int, set[int]],
    deadline: Deadline,
    counter: SearchCounter,
    level: int,
) -> list[int] | None:
    deadline.check()
    counter.visit(level)
    # wreach sets only grow in deeper calls
    if not st.is_extendable():
        return None
    if not remaining:
        return list(st.order)
    if _forced_overflow(st, remaining, forced):
        return None

    for v in sorted(remaining):
        anchors: list[int | None] = [*_breakpoints(st, v, st.k), None]
        st.activate(v)
        remaining.discard(v)
        children = 0
        try:
            for anchor in anchors:
                if anchor is None:
                    st.place_back(v)
                else:
                    st.insert_at(v, anchor, "before")
                children += 1
                try:
                    if len(st.wreach[v]) <= st.k:
                        found = _merge(st, remaining, forced, deadline, counter, level + 1)
                        if found is not None:
                            return found
                finally:
                    st.remove_at(v)
        finally:
            counter.branched(children)
            remaining.add(v)
            st.deactivate(v)
    return None


def _draw_merge_set(st: OrderState, c: int, rng: random.Random) -> list[int]:
    pool: set[int] = set()
    for v in st.overfull_vertices():
        pool.update(st.wreach[v])
    ordered_pool = sorted(pool)
    chosen = rng.sample(ordered_pool, min(c, len(ordered_pool)))
    if len(chosen) < c:
        taken = set(chosen)
        rest = [v for v in range(st.graph.n) if v not in taken]
        chosen.extend(rng.sample(rest, min(c - len(chosen), len(rest))))
    return chosen


def turbocharge_merge(
    st: OrderState,
    c: int,
    rng: random.Random,
    attempts: int = 10,
    deadline: Deadline | None = None,
    stats: RunStats | None = None,
) -> bool:
    """Repair ``st`` by re-merging random sets drawn around overfull vertices.

    Each attempt takes ``c`` vertices, preferring members of the wreach sets
    of overfull vertices, and re-merges them. The first success rebuilds
    ``st``; otherwise ``st`` is left unchanged. A set already searched is
    not searched again, and a set covering every vertex ends the repair
    after its one search.
    """
    if c <= 0:
        raise ValueError(f"reconstruction parameter must be positive, got {c}")
    deadline = deadline or Deadline()
    tried: set[frozenset[int]] = set()
    for attempt in range(1, attempts + 1):
        deadline.check()
        chosen = frozenset(_draw_merge_set(st, c, rng))
        if chosen in tried:
            continue
        tried.add(chosen)
        inst = MergeInstance(
            graph=st.graph,
            r=st.r,
            k=st.k,
            s1=tuple(v for v in st.order if v not in chosen),
            s2=tuple(chosen),
        )
        merged = recursive_merge(inst, deadline, stats, SearchCounter(c))
        if merged is not None:
            logger.debug("merge c=%d succeeded on attempt %d", c, attempt)
            st.reset_to(merged)
            return True
        if len(chosen) == st.graph.n:
            break
    logger.debug("merge c=%d failed after %d distinct sets", c, len(tried))
    return False
