"""Right-to-left subordering with potentially strongly reachable sets.

The placed vertices ``S`` form the right end of every completion; the free
vertices will all end up left of them. For a placed ``v``, ``potsreach[v]``
is ``Wreach_r(G[S], L_S, v)`` together with every free ``u`` that ``v``
reaches by a path of length at most ``r`` whose interior is placed. These
sets only grow as vertices are prepended, and equal the weakly reachable
sets once every vertex is placed.
"""
from __future__ import annotations

from collections import deque

from src.graph.graph import Graph
from src.ordering.state import OrderStateError


class RLState:
    """Subordering grown by prepending vertices at the left end."""

    def __init__(self, graph: Graph, r: int, k: int):
        if r < 1:
            raise OrderStateError(f"radius must be at least 1, got {r}")
        if k < 1:
            raise OrderStateError(f"bound k must be at least 1, got {k}")
        self.graph = graph
        self.r = r
        self.k = k
        n = graph.n
        self.order: deque[int] = deque()
        self.free: set[int] = set(range(n))
        self._placed = [False] * n
        # Wreach inside G[S]
        self.wreach_s: list[set[int]] = [set() for _ in range(n)]
        # free vertices reachable through a placed interior
        self._frontier: list[set[int]] = [set() for _ in range(n)]
        self.potsreach: list[set[int]] = [set() for _ in range(n)]
        self.potsreach_inv: list[set[int]] = [set() for _ in range(n)]
        self.overfull_count = 0
        self._score_cache: dict[int, int] = {}

    def is_placed(self, v: int) -> bool:
        return self._placed[v]

    def is_extendable(self) -> bool:
        return self.overfull_count == 0

    def potsreach_of(self, v: int) -> set[int]:
        if not self._placed[v]:
            raise OrderStateError(f"vertex {v} is not placed")
        return set(self.potsreach[v])

    def max_potsreach(self) -> int:
        return max((len(s) for s in self.potsreach), default=0)

    def signature(self) -> tuple[tuple[int, ...], tuple[frozenset[int], ...]]:
        return tuple(self.order), tuple(frozenset(s) for s in self.potsreach)

    def sreach_score(self, x: int) -> int:
        """Size of ``x``'s potsreach set if it were prepended now."""
        score = self._score_cache.get(x)
        if score is None:
            score = 1 + len(self._scan(x))
            self._score_cache[x] = score
        return score

    def prepend(self, x: int) -> None:
        """Place free ``x`` at the left end."""
        if self._placed[x]:
            raise OrderStateError(f"vertex {x} is already placed")
        # placed vertices whose frontier contains x now weakly reach it in G[S]
        affected = set(self.potsreach_inv[x])
        self.order.appendleft(x)
        self._placed[x] = True
        self.free.discard(x)
        self.wreach_s[x] = {x}
        for w in affected:
            self.wreach_s[w].add(x)
        affected.add(x)
        for w in affected:
            self._update(w)
        self._invalidate_scores(x)

    def pop_leftmost(self) -> int:
        """Remove and return the leftmost placed vertex."""
        x = self.order.popleft()
        affected = self.potsreach_inv[x] - {x}
        self._placed[x] = False
        self.free.add(x)
        for w in affected:
            self.wreach_s[w].discard(x)
        self.wreach_s[x] = set()
        self._frontier[x] = set()
        self._set_potsreach(x, set())
        for w in affected:
            self._update(w)
        self._invalidate_scores(x)
        return x

    def _scan(self, v: int) -> set[int]:
        """Free vertices reached from ``v`` through placed interior vertices."""
        placed = self._placed
        seen = {v}
        found: set[int] = set()
        frontier = [v]
        for _ in range(self.r):
            step = []
            for u in frontier:
                for w in self.graph.adjacency[u]:
                    if w in seen:
                        continue
                    seen.add(w)
                    if placed[w]:
                        step.append(w)
                    else:
                        found.add(w)
            if not step:
                break
            frontier = step
        return found

    def _update(self, w: int) -> None:
        self._frontier[w] = self._scan(w)
        self._set_potsreach(w, self.wreach_s[w] | self._frontier[w])

    def _set_potsreach(self, v: int, new: set[int]) -> None:
        old = self.potsreach[v]
        k = self.k
        was_over = len(old) > k
        for u in old - new:
            self.potsreach_inv[u].discard(v)
        for u in new - old:
            self.potsreach_inv[u].add(v)
        self.potsreach[v] = new
        is_over = len(new) > k
        if is_over and not was_over:
            self.overfull_count += 1
        elif was_over and not is_over:
            self.overfull_count -= 1

    def _invalidate_scores(self, changed: int) -> None:
        if not self._score_cache:
            return
        # scores depend only on the placed set within distance r
        seen = {changed}
        frontier = [changed]
        for _ in range(self.r):
            step = []
            for u in frontier:
                for w in self.graph.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        step.append(w)
            frontier = step
        for w in seen:
            self._score_cache.pop(w, None)
