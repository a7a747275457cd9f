"""Run configuration for the optimization driver."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from src.config import settings
from src.heuristics.selection import HeuristicKind


class TurboKind(str, Enum):
    NONE = "none"
    IC = "ic"
    MERGE = "merge"
    IC_RL = "ic-rl"


class IncompatibleConfigError(ValueError):
    """Raised for a heuristic/turbocharger pair that cannot work together."""


def check_compatible(heuristic: HeuristicKind, turbo: TurboKind) -> None:
    """``ic`` and ``merge`` need a left-to-right rule, ``ic-rl`` a right-to-left one."""
    if turbo is TurboKind.NONE:
        return
    if turbo is TurboKind.IC_RL and heuristic.left_to_right:
        raise IncompatibleConfigError(
            f"--turbo {turbo.value} needs a right-to-left heuristic (sreach, degree-rl), "
            f"got --heuristic {heuristic.value}"
        )
    if turbo is not TurboKind.IC_RL and not heuristic.left_to_right:
        raise IncompatibleConfigError(
            f"--turbo {turbo.value} needs a left-to-right heuristic (degree-lr, wreach), "
            f"got --heuristic {heuristic.value}"
        )


@dataclass
class RunConfig:
    """Parameters of one ``optimize`` run.

    Attributes:
        r: Radius
        heuristic: Greedy selection rule
        turbo: Repair search used at points of regret
        timeout: Wall-clock seconds after the baseline; ``None`` is unlimited
        seed: Seed of the generator threaded through the run
        target: First k to try instead of baseline - 1
        merge_attempts: Attempts per merge repair
        compute_lower_bound: Compute the lower bound used for early stopping
    """
    r: int = field(default_factory=lambda: settings.solver.default_radius)
    heuristic: HeuristicKind = HeuristicKind.DEGREE_LR
    turbo: TurboKind = TurboKind.NONE
    timeout: float | None = field(default_factory=lambda: settings.solver.default_timeout)
    seed: int = field(default_factory=lambda: settings.solver.default_seed)
    target: int | None = None
    merge_attempts: int = field(default_factory=lambda: settings.solver.merge_attempts)
    compute_lower_bound: bool = True

    def __post_init__(self):
        self.heuristic = HeuristicKind(self.heuristic)
        self.turbo = TurboKind(self.turbo)
        if self.r < 1:
            raise ValueError(f"--radius must be at least 1, got {self.r}")
        if self.merge_attempts < 1:
            raise ValueError(f"--merge-attempts must be at least 1, got {self.merge_attempts}")
        if self.target is not None and self.target < 1:
            raise ValueError(f"--target must be at least 1, got {self.target}")
        check_compatible(self.heuristic, self.turbo)
