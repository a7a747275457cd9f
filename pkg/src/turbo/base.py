"""Cooperative deadlines and per-invocation search counters."""
from __future__ import annotations

import time
from dataclasses import dataclass


class SearchTimeout(RuntimeError):
    """Raised by ``Deadline.check`` once the time budget is spent."""


class Deadline:
    """Wall-clock budget; ``None`` seconds means unlimited."""

    def __init__(self, seconds: float | None = None):
        self.seconds = seconds
        self._expires_at = None if seconds is None else time.monotonic() + seconds

    def expired(self) -> bool:
        return self._expires_at is not None and time.monotonic() >= self._expires_at

    def remaining(self) -> float | None:
        if self._expires_at is None:
            return None
        return max(0.0, self._expires_at - time.monotonic())

    def check(self) -> None:
        if self.expired():
            raise SearchTimeout(f"time budget of {self.seconds}s exhausted")


@dataclass
class SearchCounter:
    """Node, depth and branching counts of one search.

    Levels start at 1 for the root; ``max_depth`` is capped at ``c``.
    """
    c: int
    nodes: int = 0
    max_depth: int = 1
    max_branching: int = 0

    def visit(self, level: int) -> None:
        self.nodes += 1
        if level > self.max_depth:
            self.max_depth = min(level, self.c)

    def branched(self, children: int) -> None:
        if children > self.max_branching:
            self.max_branching = children
