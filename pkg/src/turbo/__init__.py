"""Turbocharging repair searches invoked at a point of regret."""
from src.turbo.base import Deadline, SearchCounter, SearchTimeout
from src.turbo.ic import turbocharge_ic
from src.turbo.merge import MergeInstance, breakpoints_of, recursive_merge, turbocharge_merge
from src.turbo.rl import turbocharge_rl

__all__ = [
    "Deadline",
    "MergeInstance",
    "SearchCounter",
    "SearchTimeout",
    "breakpoints_of",
    "recursive_merge",
    "turbocharge_ic",
    "turbocharge_merge",
    "turbocharge_rl",
]
