"""Exact weak coloring numbers for tiny graphs."""
from __future__ import annotations

import itertools
import logging

from src.config import settings
from src.graph.graph import Graph
from src.ordering.evaluate import evaluate_full_ordering
from src.ordering.state import OrderState

logger = logging.getLogger(__name__)

BRUTEFORCE_LIMIT = 7


class OracleLimitError(ValueError):
    """Raised when a graph is too large for exact solving."""


def exact_wcol(graph: Graph, r: int, limit: int | None = None) -> tuple[int, list[int]]:
    """Return ``(wcol_r(G), optimal ordering)``.

    Tries bounds ``k = 1, 2, ...`` and for each runs a depth-first search over
    prefixes, cutting every prefix whose subordering is already over ``k``.

    Raises:
        OracleLimitError: If ``graph.n`` exceeds ``limit`` (default from settings).
    """
    limit = settings.solver.oracle_limit if limit is None else limit
    _check_limit(graph, limit)
    if graph.n == 0:
        return 0, []
    for k in range(1, graph.n + 1):
        st = OrderState(graph, r, k)
        order = _search(st)
        if order is not None:
            logger.debug("exact wcol_%d = %d (n=%d)", r, k, graph.n)
            return k, order
    raise AssertionError("every ordering has wcol at most n")


def exact_wcol_bruteforce(
    graph: Graph, r: int, limit: int = BRUTEFORCE_LIMIT
) -> tuple[int, list[int]]:
    """Minimum of ``evaluate_full_ordering`` over all permutations."""
    _check_limit(graph, limit)
    if graph.n == 0:
        return 0, []
    best: tuple[int, list[int]] | None = None
    for perm in itertools.permutations(range(graph.n)):
        value, _ = evaluate_full_ordering(graph, r, perm)
        if best is None or value < best[0]:
            best = (value, list(perm))
    return best


def _check_limit(graph: Graph, limit: int) -> None:
    if graph.n > limit:
        raise OracleLimitError(
            f"exact solving is limited to {limit} vertices, graph has {graph.n}"
        )


def _search(st: OrderState) -> list[int] | None:
    if not st.free:
        return list(st.order)
    for v in sorted(st.free):
        st.place_back(v)
        if st.is_extendable():
            found = _search(st)
            if found is not None:
                return found
        st.pop_back()
    return None
