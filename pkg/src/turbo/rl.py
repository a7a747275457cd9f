"""Replace the ``c`` leftmost vertices of a right-to-left subordering."""
from __future__ import annotations

import logging
import time

import numpy as np

from src.driver.stats import RunStats, TurboInvocation
from src.graph.distances import DistanceTable
from src.ordering.rl_state import RLState
from src.turbo.base import Deadline, SearchCounter

logger = logging.getLogger(__name__)


def turbocharge_rl(
    st: RLState,
    c: int,
    dist: DistanceTable,
    deadline: Deadline,
    stats: RunStats | None = None,
) -> bool:
    """Mirror of ``turbocharge_ic`` for ``RLState``.

    The freed block is refilled by prepending, candidates ordered by distance
    to the leftmost vertex of the entry subordering.
    """
    if c <= 0:
        raise ValueError(f"reconstruction parameter must be positive, got {c}")
    anchor = st.order[0] if st.order else None
    m = min(c, len(st.order))
    removed = [st.pop_leftmost() for _ in range(m)]
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
                st.pop_leftmost()
            for v in reversed(removed):
                st.prepend(v)
        invocation = TurboInvocation(
            "ic-rl", c, counter.nodes, counter.max_depth, success, time.perf_counter() - started
        )
        if stats is not None:
            stats.record_invocation(invocation)
        logger.debug("ic-rl c=%d nodes=%d success=%s", c, counter.nodes, success)
    return success


def _fill(
    st: RLState,
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
        st.prepend(u)
        if st.is_extendable() and _fill(st, remaining - 1, row, deadline, counter, level + 1):
            return True
        st.pop_leftmost()
    return False
