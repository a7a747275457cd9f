"""Turbocharged optimization loop.

``optimize`` starts from the plain heuristic ordering and repeatedly asks for
an ordering one below the best value found so far. Each attempt reruns the
heuristic against the bound and calls the repair search whenever the partial
ordering goes over it, growing the reconstruction parameter after every
failed attempt. The best certified ordering is returned when the time budget
runs out.
"""
from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass

from src.bounds.mmd_plus import best_lower_bound
from src.driver.config import RunConfig, TurboKind, check_compatible
from src.driver.stats import RunStats
from src.graph.distances import DistanceTable, all_pairs_distances
from src.graph.graph import Graph
from src.heuristics.selection import (
    HeuristicKind,
    immediate_full_placements,
    next_vertex,
    run_plain,
)
from src.ordering.evaluate import evaluate_full_ordering
from src.ordering.rl_state import RLState
from src.ordering.state import OrderState
from src.turbo.base import Deadline, SearchTimeout
from src.turbo.ic import turbocharge_ic
from src.turbo.merge import turbocharge_merge
from src.turbo.rl import turbocharge_rl

logger = logging.getLogger(__name__)


@dataclass
class OptimizeResult:
    order: list[int]
    k: int
    stats: RunStats


def run_turbocharged(
    graph: Graph,
    r: int,
    heuristic: HeuristicKind,
    turbo: TurboKind,
    k: int,
    c: int,
    rng: random.Random,
    deadline: Deadline,
    stats: RunStats,
    dist: DistanceTable | None = None,
    merge_attempts: int = 10,
) -> list[int] | None:
    """One attempt at an ordering with wcol at most ``k``.

    Returns the full ordering, or ``None`` when a repair search fails.
    Raises ``SearchTimeout`` when ``deadline`` expires.
    """
    check_compatible(heuristic, turbo)
    if turbo in (TurboKind.IC, TurboKind.IC_RL) and dist is None:
        dist = all_pairs_distances(graph)

    if heuristic.left_to_right:
        st = OrderState(graph, r, k)
        eager = heuristic is HeuristicKind.DEGREE_LR and turbo is not TurboKind.NONE
        while True:
            deadline.check()
            if not st.is_extendable():
                if turbo is TurboKind.NONE:
                    return None
                if turbo is TurboKind.IC:
                    repaired = turbocharge_ic(st, c, dist, deadline, stats)
                else:
                    repaired = turbocharge_merge(st, c, rng, merge_attempts, deadline, stats)
                if not repaired:
                    return None
                continue
            if eager:
                immediate_full_placements(st)
                if not st.is_extendable():
                    continue
            if not st.free:
                break
            st.place_back(next_vertex(st, heuristic))
        order = list(st.order)
    else:
        rl = RLState(graph, r, k)
        while True:
            deadline.check()
            if not rl.is_extendable():
                if turbo is TurboKind.NONE:
                    return None
                if not turbocharge_rl(rl, c, dist, deadline, stats):
                    return None
                continue
            if not rl.free:
                break
            rl.prepend(next_vertex(rl, heuristic))
        order = list(rl.order)

    wcol, _ = evaluate_full_ordering(graph, r, order)
    if wcol > k:
        raise AssertionError(f"attempt for k={k} produced an ordering with wcol {wcol}")
    return order


def optimize(graph: Graph, cfg: RunConfig, instance: str = "") -> OptimizeResult:
    """Best ordering found within ``cfg.timeout`` seconds after the baseline."""
    started = time.perf_counter()
    stats = RunStats(
        instance=instance,
        n=graph.n,
        m=graph.m,
        r=cfg.r,
        heuristic=cfg.heuristic.value,
        turbo=cfg.turbo.value,
        seed=cfg.seed,
    )

    best_order, k = run_plain(graph, cfg.r, cfg.heuristic)
    stats.baseline_k = k
    stats.record_improvement(time.perf_counter() - started, k)
    logger.info("baseline %s: wcol_%d = %d", cfg.heuristic.value, cfg.r, k)

    lower = 1 if graph.n else 0
    if cfg.compute_lower_bound:
        lower = max(lower, best_lower_bound(graph, cfg.r))
    stats.lower_bound = lower

    if cfg.turbo is not TurboKind.NONE and graph.n:
        best_order, k = _improve(graph, cfg, stats, best_order, k, started)

    stats.final_k = k
    if k <= lower:
        stats.proven_optimal = True
    stats.total_time = time.perf_counter() - started
    return OptimizeResult(order=best_order, k=k, stats=stats)


def _improve(
    graph: Graph,
    cfg: RunConfig,
    stats: RunStats,
    best_order: list[int],
    k: int,
    started: float,
) -> tuple[list[int], int]:
    deadline = Deadline(cfg.timeout)
    dist = None
    if cfg.turbo in (TurboKind.IC, TurboKind.IC_RL):
        dist = all_pairs_distances(graph)
    rng = random.Random(cfg.seed)
    lower = stats.lower_bound

    target = k - 1
    if cfg.target is not None:
        target = min(max(cfg.target, lower), k - 1)
    try:
        while target >= lower and target >= 1:
            c = 1
            while True:
                logger.debug("trying k=%d with c=%d", target, c)
                order = run_turbocharged(
                    graph, cfg.r, cfg.heuristic, cfg.turbo, target, c, rng, deadline, stats,
                    dist=dist, merge_attempts=cfg.merge_attempts,
                )
                if order is not None:
                    wcol, _ = evaluate_full_ordering(graph, cfg.r, order)
                    best_order, k = order, wcol
                    stats.record_improvement(time.perf_counter() - started, k)
                    logger.info("improved to wcol_%d = %d (c=%d)", cfg.r, k, c)
                    target = k - 1
                    break
                if c >= graph.n:
                    # with c >= n every repair search is exhaustive
                    if target == k - 1:
                        stats.proven_optimal = True
                        logger.info("no ordering with wcol_%d <= %d exists", cfg.r, target)
                        return best_order, k
                    target += 1
                    break
                c += 1
    except SearchTimeout:
        stats.timed_out = True
        logger.info("time budget exhausted at k=%d", k)
    return best_order, k
