"""Greedy vertex-selection rules.

Left-to-right rules (``degree-lr``, ``wreach``) append to an ``OrderState``;
right-to-left rules (``sreach``, ``degree-rl``) prepend to an ``RLState``.
Every rule breaks remaining ties by ascending vertex index.
"""
from __future__ import annotations

import logging
from enum import Enum

from src.graph.graph import Graph
from src.ordering.evaluate import evaluate_full_ordering
from src.ordering.rl_state import RLState
from src.ordering.state import OrderState, OrderStateError

logger = logging.getLogger(__name__)


class HeuristicKind(str, Enum):
    DEGREE_LR = "degree-lr"
    WREACH_LR = "wreach"
    SREACH_RL = "sreach"
    DEGREE_RL = "degree-rl"

    @property
    def left_to_right(self) -> bool:
        return self in (HeuristicKind.DEGREE_LR, HeuristicKind.WREACH_LR)


class NoFreeVertexError(OrderStateError):
    """Raised when a rule is asked to choose from an empty free set."""


def next_vertex(st: OrderState | RLState, kind: HeuristicKind) -> int:
    """Return the free vertex the rule ``kind`` places next."""
    if not st.free:
        raise NoFreeVertexError("no free vertex left to place")
    adjacency = st.graph.adjacency
    if kind is HeuristicKind.DEGREE_LR:
        return min(st.free, key=lambda v: (-len(adjacency[v]), v))
    if kind is HeuristicKind.WREACH_LR:
        wreach = st.wreach
        return min(st.free, key=lambda v: (-len(wreach[v]), -len(adjacency[v]), v))
    if kind is HeuristicKind.SREACH_RL:
        return min(st.free, key=lambda v: (st.sreach_score(v), v))
    return min(st.free, key=lambda v: (len(adjacency[v]), v))


def immediate_full_placements(st: OrderState) -> int:
    """Place free vertices whose wreach set already has size ``k``.

    Such a vertex can go next without loss; the lowest index goes first and
    the rule repeats until none is left or the state stops being extendable.
    Returns the number of vertices placed.
    """
    placed = 0
    while st.is_extendable():
        full = [v for v in st.free if len(st.wreach[v]) == st.k]
        if not full:
            break
        st.place_back(min(full))
        placed += 1
    return placed


def run_plain(graph: Graph, r: int, kind: HeuristicKind) -> tuple[list[int], int]:
    """Build a full ordering with the plain rule and certify its wcol."""
    k = max(graph.n, 1)
    if kind.left_to_right:
        st = OrderState(graph, r, k)
        while st.free:
            st.place_back(next_vertex(st, kind))
        order = list(st.order)
    else:
        rl = RLState(graph, r, k)
        while rl.free:
            rl.prepend(next_vertex(rl, kind))
        order = list(rl.order)
    wcol, _ = evaluate_full_ordering(graph, r, order)
    logger.debug("plain %s ordering: wcol_%d = %d", kind.value, r, wcol)
    return order, wcol
