"""Ordering files: one original vertex label per line, leftmost first."""
from __future__ import annotations

from collections.abc import Sequence

from src.graph.graph import Graph
from src.ordering.evaluate import OrderingError


def read_ordering(text: str, graph: Graph) -> list[int]:
    """Parse an ordering file into internal vertex indices.

    Blank lines and ``#`` comments are skipped.

    Raises:
        OrderingError: On unknown labels, duplicates or missing vertices.
    """
    order: list[int] = []
    seen: set[int] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            label = int(line)
        except ValueError:
            raise OrderingError(f"non-integer label {line!r}", line_no) from None
        if not graph.has_label(label):
            raise OrderingError(f"unknown vertex label {label}", line_no)
        v = graph.index_of(label)
        if v in seen:
            raise OrderingError(f"vertex {label} listed twice", line_no)
        seen.add(v)
        order.append(v)
    if len(order) != graph.n:
        missing = sorted(graph.labels[v] for v in range(graph.n) if v not in seen)
        shown = ", ".join(str(label) for label in missing[:10])
        raise OrderingError(f"ordering misses {len(missing)} vertices ({shown})")
    return order


def write_ordering(order: Sequence[int], graph: Graph) -> str:
    return "".join(f"{graph.labels[v]}\n" for v in order)
