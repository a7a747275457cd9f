"""Replace the last ``c`` placed vertices by a depth-first search."""
from __future__ import annotations

import logging
import time

import numpy as np

from src.driver.stats import RunStats, TurboInvocation
from src.graph.distances import DistanceTable
from src.ordering.state import OrderState
from src.turbo.base import Deadline, SearchCounter

logger = logging.getLogger(__name__)


def turbocharge_ic(
    st: OrderState,
    c: int,
    dist: DistanceTable,
    deadline: Deadline,
    stats: RunStats | None = None,
) -> bool:
    """Try to make ``st`` extendable by rebuilding its last ``min(c, |S|)`` slots.

    Freed slots are filled left to right with free vertices, nearest to the
    old rightmost vertex first. On failure or ``SearchTimeout`` the state is
    restored to its entry value.
    """
    if c <= 0:
        raise ValueError(f"reconstruction parameter must be positive, got {c}")
    anchor = st.order[-1] if st.order else None
    m = min(c, len(st.order))
    removed = [st.pop_back() for _ in range(m)]
    removed.reverse()
    base = len(st.order)

    row = dist.row(anchor) if anchor is not None else None
    counter = SearchCounter(c)
    started = time.perf_counter()
    success = False
    try:
        success = st.is_extendable() and _fill(st, m, row, deadline, counter, 1)
    finally:
        if not success:
            while len(st.order) > base:
                st.pop_back()
            for v in removed:
                st.place_back(v)
        invocation = TurboInvocation(
            "ic", c, counter.nodes, counter.max_depth, success, time.perf_counter() - started
        )
        if stats is not None:
            stats.record_invocation(invocation)
        logger.debug("ic c=%d nodes=%d success=%s", c, counter.nodes, success)
    return success


def _fill(
    st: OrderState,
    remaining: int,
    row: np.ndarray | None,
    deadline: Deadline,
    counter: SearchCounter,
    level: int,
) -> bool:
    if remaining == 0:
        return True
    if row is None:
        candidates = sorted(st.free)
    else:
        candidates = sorted(st.free, key=lambda u: (int(row[u]), u))
    for u in candidates:
        deadline.check()
        counter.visit(level)
        st.place_back(u)
        if st.is_extendable() and _fill(st, remaining - 1, row, deadline, counter, level + 1):
            return True
        st.pop_back()
    return False
