"""Lower bounds on the weak r-coloring number.

``wcol_mmd_plus`` runs a minimum-degree contraction heuristic: it builds a
minor of G whose branch sets have small diameter and reports one plus the
largest minimum degree seen along the way. Contracting sets of diameter at
most ``(r - 1) // 2`` keeps ``degeneracy(H) + 1 <= wcol_r(G)`` for the minor H.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Literal

from src.graph.degeneracy import degeneracy
from src.graph.distances import induced_diameter
from src.graph.graph import Graph, GraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinorModel:
    """Branch set and adjacency of every minor vertex."""
    branch_sets: dict[int, frozenset[int]]
    adjacency: dict[int, frozenset[int]]

    def validate(self, graph: Graph, r: int) -> None:
        """Check the minor-model conditions, raising ``GraphError`` on a violation."""
        limit = (r - 1) // 2
        owner: dict[int, int] = {}
        for x, members in self.branch_sets.items():
            if not members:
                raise GraphError(f"branch set of {x} is empty")
            for v in members:
                if v in owner:
                    raise GraphError(f"vertex {v} lies in branch sets {owner[v]} and {x}")
                owner[v] = x
            if induced_diameter(graph, members) > limit:
                raise GraphError(f"branch set of {x} is disconnected or wider than {limit}")
        for x, neighbors in self.adjacency.items():
            for y in neighbors:
                if x not in self.adjacency.get(y, ()):
                    raise GraphError(f"minor edge {x}-{y} is not symmetric")
                if not any(
                    w in self.branch_sets[y]
                    for v in self.branch_sets[x]
                    for w in graph.adjacency[v]
                ):
                    raise GraphError(f"minor edge {x}-{y} has no witness edge")

    def min_degree(self) -> int:
        return min((len(ns) for ns in self.adjacency.values()), default=0)


@dataclass(frozen=True)
class MmdPlusStep:
    action: Literal["contract", "delete"]
    vertex: int
    degree: int
    partner: int | None = None
    merged: int | None = None


@dataclass
class MmdPlusResult:
    bound: int
    steps: list[MmdPlusStep] = field(default_factory=list)
    model: MinorModel | None = None  # minor at the step that set ``bound``


def mmd_plus_trace(graph: Graph, r: int) -> MmdPlusResult:
    """Run the contraction heuristic and keep its trace."""
    if r < 1:
        raise ValueError(f"radius must be at least 1, got {r}")
    limit = (r - 1) // 2
    branch: dict[int, frozenset[int]] = {v: frozenset((v,)) for v in range(graph.n)}
    adj: dict[int, set[int]] = {v: set(graph.adjacency[v]) for v in range(graph.n)}
    next_id = graph.n
    result = MmdPlusResult(bound=0)

    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        degree = len(adj[v])
        if degree + 1 > result.bound:
            result.bound = degree + 1
            result.model = MinorModel(
                branch_sets=dict(branch),
                adjacency={x: frozenset(ns) for x, ns in adj.items()},
            )
        partner = None
        if limit > 0:
            for w in sorted(adj[v], key=lambda x: (len(adj[x]), x)):
                if induced_diameter(graph, branch[v] | branch[w]) <= limit:
                    partner = w
                    break
        if partner is None:
            for x in adj.pop(v):
                adj[x].discard(v)
            del branch[v]
            result.steps.append(MmdPlusStep("delete", v, degree))
            continue
        merged = next_id
        next_id += 1
        neighbors = (adj.pop(v) | adj.pop(partner)) - {v, partner}
        for x in neighbors:
            adj[x] -= {v, partner}
            adj[x].add(merged)
        adj[merged] = neighbors
        branch[merged] = branch.pop(v) | branch.pop(partner)
        result.steps.append(MmdPlusStep("contract", v, degree, partner, merged))

    logger.debug("mmd+ bound for r=%d: %d after %d steps", r, result.bound, len(result.steps))
    return result


def wcol_mmd_plus(graph: Graph, r: int) -> int:
    """Lower bound on ``wcol_r(G)``; ``degeneracy + 1`` for ``r <= 2``."""
    return mmd_plus_trace(graph, r).bound


def degeneracy_bound(graph: Graph) -> int:
    """``degeneracy + 1``, a lower bound for every radius (0 for the empty graph)."""
    if graph.n == 0:
        return 0
    value, _ = degeneracy(graph)
    return value + 1


def best_lower_bound(graph: Graph, r: int) -> int:
    return max(degeneracy_bound(graph), wcol_mmd_plus(graph, r))
