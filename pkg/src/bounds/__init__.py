"""Lower bounds on weak coloring numbers."""
from src.bounds.mmd_plus import (
    MinorModel,
    MmdPlusResult,
    MmdPlusStep,
    best_lower_bound,
    degeneracy_bound,
    mmd_plus_trace,
    wcol_mmd_plus,
)

__all__ = [
    "MinorModel",
    "MmdPlusResult",
    "MmdPlusStep",
    "best_lower_bound",
    "degeneracy_bound",
    "mmd_plus_trace",
    "wcol_mmd_plus",
]
