"""Suborderings with maintained reachability sets, and full-ordering checks."""
from src.ordering.evaluate import (
    OrderingError,
    evaluate_full_ordering,
    full_wreach_sets,
)
from src.ordering.io import read_ordering, write_ordering
from src.ordering.rl_state import RLState
from src.ordering.state import OrderState, OrderStateError

__all__ = [
    "OrderState",
    "OrderStateError",
    "OrderingError",
    "RLState",
    "evaluate_full_ordering",
    "full_wreach_sets",
    "read_ordering",
    "write_ordering",
]
