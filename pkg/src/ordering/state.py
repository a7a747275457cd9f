"""Mutable left-to-right subordering with maintained weak reachability sets.

For every vertex ``v`` the state keeps ``wreach[v]``: ``v`` itself plus every
placed ``u`` joined to ``v`` by a path of length at most ``r`` on which ``u``
is the leftmost placed vertex (free vertices on the path are unconstrained).
``wreach_inv[u]`` is the inverse relation. Both are exact after every
mutation; ``overfull_count`` is the number of vertices whose set exceeds ``k``.

Vertices may be deactivated, which removes them from the graph the state
works on. Inactive vertices are neither placed nor free.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from typing import Literal

from src.graph.graph import Graph

logger = logging.getLogger(__name__)

Side = Literal["before", "after"]

FREE = -1


class OrderStateError(ValueError):
    """Raised for illegal mutations or invalid radius/bound."""


class OrderState:
    """Subordering ``L_S`` of a graph, extended by the free vertices ``T``."""

    def __init__(self, graph: Graph, r: int, k: int, inactive: Iterable[int] = ()):
        if r < 1:
            raise OrderStateError(f"radius must be at least 1, got {r}")
        if k < 1:
            raise OrderStateError(f"bound k must be at least 1, got {k}")
        self.graph = graph
        self.r = r
        self.k = k
        self._active = [True] * graph.n
        for v in inactive:
            self._active[v] = False
        self._reset()

    def _reset(self) -> None:
        n = self.graph.n
        self.order: list[int] = []
        self._position = [FREE] * n
        self.free: set[int] = {v for v in range(n) if self._active[v]}
        self.wreach: list[set[int]] = [{v} for v in range(n)]
        self.wreach_inv: list[set[int]] = [{v} for v in range(n)]
        # edges of G[T]: active free neighbors of each vertex
        self._free_adj: list[set[int]] = [
            {w for w in self.graph.adjacency[v] if self._active[w]} for v in range(n)
        ]
        self.overfull_count = 0

    # -- queries ---------------------------------------------------------

    def position(self, v: int) -> int:
        """Index of ``v`` in the order, or ``-1`` if it is not placed."""
        return self._position[v]

    def is_placed(self, v: int) -> bool:
        return self._position[v] != FREE

    def is_active(self, v: int) -> bool:
        return self._active[v]

    def is_extendable(self) -> bool:
        return self.overfull_count == 0

    def max_wreach(self) -> int:
        return max((len(s) for s in self.wreach), default=0)

    def overfull_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if len(self.wreach[v]) > self.k]

    def signature(self) -> tuple[tuple[int, ...], tuple[frozenset[int], ...]]:
        """Order plus every wreach set; equal signatures mean equal states."""
        return tuple(self.order), tuple(frozenset(s) for s in self.wreach)

    def probe_reach(self, v: int, after_position: int) -> set[int]:
        """Vertices ``v`` would reach if placed directly after ``after_position``.

        ``v`` must not be placed; it need not be active. Use ``-1`` for the
        far left. The result contains ``v``.
        """
        if self.is_placed(v):
            raise OrderStateError(f"vertex {v} is already placed")
        position = self._position
        active = self._active
        reached = {v}
        frontier = [v]
        for _ in range(self.r):
            step = []
            for x in frontier:
                for w in self.graph.adjacency[x]:
                    if w in reached or not active[w]:
                        continue
                    if position[w] == FREE or position[w] > after_position:
                        reached.add(w)
                        step.append(w)
            if not step:
                break
            frontier = step
        return reached

    # -- mutations -------------------------------------------------------

    def place_back(self, v: int) -> None:
        """Append free vertex ``v`` at the right end."""
        self._require_free(v)
        self._position[v] = len(self.order)
        self.order.append(v)
        self._leave_free(v)
        # v is rightmost, so only free vertices may carry its paths
        reached = {v}
        frontier = [v]
        for _ in range(self.r):
            step = []
            for x in frontier:
                for w in self._free_adj[x]:
                    if w not in reached:
                        reached.add(w)
                        step.append(w)
            if not step:
                break
            frontier = step
        for x in reached:
            if x != v:
                self._add(x, v)

    def insert_at(self, v: int, anchor: int, side: Side) -> None:
        """Place free ``v`` directly before or after the placed ``anchor``."""
        self._require_free(v)
        if not self.is_placed(anchor):
            raise OrderStateError(f"anchor {anchor} is not placed")
        if side not in ("before", "after"):
            raise OrderStateError(f"side must be 'before' or 'after', got {side!r}")
        index = self._position[anchor] + (1 if side == "after" else 0)
        self.order.insert(index, v)
        self._reindex(index)
        self._leave_free(v)
        # v now blocks paths of everything to its right
        for u in self.order[index:]:
            self._refresh(u)

    def remove_at(self, v: int) -> None:
        """Take placed ``v`` out of the order; it becomes free."""
        index = self._position[v]
        if index == FREE:
            raise OrderStateError(f"vertex {v} is not placed")
        del self.order[index]
        self._position[v] = FREE
        self._reindex(index)
        self._enter_free(v)
        self._set_reach(v, {v})
        for u in self.order[index:]:
            self._refresh(u)

    def pop_back(self) -> int:
        v = self.order[-1]
        self.remove_at(v)
        return v

    def activate(self, v: int) -> None:
        """Add inactive ``v`` back to the graph as a free vertex."""
        if self._active[v]:
            raise OrderStateError(f"vertex {v} is already active")
        self._active[v] = True
        self._enter_free(v)
        self._free_adj[v] = {w for w in self.graph.adjacency[v] if w in self.free}
        affected: set[int] = set()
        for x in self.graph.adjacency[v]:
            if self._active[x]:
                affected.update(self.wreach[x])
        for u in affected:
            if self.is_placed(u):
                self._refresh(u)

    def deactivate(self, v: int) -> None:
        """Remove free ``v`` from the graph."""
        self._require_free(v)
        self._active[v] = False
        self._leave_free(v)
        for u in list(self.wreach[v]):
            if u != v:
                self._refresh(u)

    def reset_to(self, order: Iterable[int]) -> None:
        """Rebuild the state as the given subordering."""
        self._reset()
        for v in order:
            self.place_back(v)

    # -- internals -------------------------------------------------------

    def _require_free(self, v: int) -> None:
        if self.is_placed(v):
            raise OrderStateError(f"vertex {v} is already placed")
        if not self._active[v]:
            raise OrderStateError(f"vertex {v} is not active")

    def _reindex(self, start: int) -> None:
        for i in range(start, len(self.order)):
            self._position[self.order[i]] = i

    def _leave_free(self, v: int) -> None:
        self.free.discard(v)
        for w in self.graph.adjacency[v]:
            self._free_adj[w].discard(v)

    def _enter_free(self, v: int) -> None:
        self.free.add(v)
        for w in self.graph.adjacency[v]:
            self._free_adj[w].add(v)

    def _reach_of(self, u: int) -> set[int]:
        """Order-respecting search from placed ``u``."""
        pos_u = self._position[u]
        position = self._position
        active = self._active
        reached = {u}
        frontier = [u]
        for _ in range(self.r):
            step = []
            for x in frontier:
                for w in self.graph.adjacency[x]:
                    if w in reached or not active[w]:
                        continue
                    if position[w] == FREE or position[w] > pos_u:
                        reached.add(w)
                        step.append(w)
            if not step:
                break
            frontier = step
        return reached

    def _refresh(self, u: int) -> None:
        self._set_reach(u, self._reach_of(u))

    def _set_reach(self, u: int, reached: set[int]) -> None:
        current = self.wreach_inv[u]
        for x in current - reached:
            self._discard(x, u)
        for x in reached - current:
            self._add(x, u)

    def _add(self, owner: int, u: int) -> None:
        members = self.wreach[owner]
        members.add(u)
        self.wreach_inv[u].add(owner)
        if len(members) == self.k + 1:
            self.overfull_count += 1

    def _discard(self, owner: int, u: int) -> None:
        members = self.wreach[owner]
        if len(members) == self.k + 1:
            self.overfull_count -= 1
        members.discard(u)
        self.wreach_inv[u].discard(owner)
