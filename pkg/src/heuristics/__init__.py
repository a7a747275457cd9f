"""Greedy ordering heuristics."""
from src.heuristics.selection import (
    HeuristicKind,
    NoFreeVertexError,
    immediate_full_placements,
    next_vertex,
    run_plain,
)

__all__ = [
    "HeuristicKind",
    "NoFreeVertexError",
    "immediate_full_placements",
    "next_vertex",
    "run_plain",
]
