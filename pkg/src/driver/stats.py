"""Search instrumentation collected over one optimization run."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

TurboName = Literal["ic", "merge", "ic-rl"]


@dataclass(frozen=True)
class TurboInvocation:
    """One turbocharger search."""
    kind: TurboName
    c: int
    nodes: int
    depth: int
    success: bool
    elapsed: float  # seconds

    @property
    def depth_over_c(self) -> float:
        return self.depth / self.c if self.c > 0 else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "c": self.c,
            "nodes": self.nodes,
            "depth": self.depth,
            "depth_over_c": round(self.depth_over_c, 4),
            "success": self.success,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


@dataclass(frozen=True)
class TimelinePoint:
    elapsed: float  # seconds since the run started
    k: int


@dataclass
class RunStats:
    """Counters of one ``optimize`` run."""
    instance: str = ""
    n: int = 0
    m: int = 0
    r: int = 0
    heuristic: str = ""
    turbo: str = "none"
    seed: int = 0
    baseline_k: int = 0
    final_k: int = 0
    lower_bound: int = 0
    proven_optimal: bool = False
    timed_out: bool = False
    total_time: float = 0.0
    time_in_tc: float = 0.0
    invocations: list[TurboInvocation] = field(default_factory=list)
    timeline: list[TimelinePoint] = field(default_factory=list)

    @property
    def cnt_tc(self) -> int:
        return len(self.invocations)

    @property
    def nodes_total(self) -> int:
        return sum(inv.nodes for inv in self.invocations)

    def record_invocation(self, invocation: TurboInvocation) -> None:
        self.invocations.append(invocation)
        self.time_in_tc += invocation.elapsed

    def record_improvement(self, elapsed: float, k: int) -> None:
        if self.timeline and k >= self.timeline[-1].k:
            raise ValueError(f"timeline must strictly decrease, got k={k} after {self.timeline[-1].k}")
        self.timeline.append(TimelinePoint(elapsed, k))

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "heuristic": self.heuristic,
            "turbo": self.turbo,
            "seed": self.seed,
            "final_k": self.final_k,
            "baseline_k": self.baseline_k,
            "lower_bound": self.lower_bound,
            "proven_optimal": self.proven_optimal,
            "timed_out": self.timed_out,
            "cnt_tc": self.cnt_tc,
            "nodes_total": self.nodes_total,
            "time_in_tc_ms": round(self.time_in_tc * 1000, 3),
            "total_ms": round(self.total_time * 1000, 3),
            "invocations": [inv.to_dict() for inv in self.invocations],
            "timeline": [
                {"elapsed_ms": round(point.elapsed * 1000, 3), "k": point.k}
                for point in self.timeline
            ],
        }


def invocation_summary(stats: RunStats) -> dict[str, Any]:
    """Aggregate view of the invocations, by turbocharger kind."""
    summary: dict[str, Any] = {}
    for inv in stats.invocations:
        entry = summary.setdefault(inv.kind, {"count": 0, "successes": 0, "nodes": 0, "max_c": 0})
        entry["count"] += 1
        entry["successes"] += int(inv.success)
        entry["nodes"] += inv.nodes
        entry["max_c"] = max(entry["max_c"], inv.c)
    return summary
