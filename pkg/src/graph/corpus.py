"""Bundled mini-corpus of small sparse instances.

Every instance is deterministic: real-world graphs shipped with networkx and
seeded random generators. Sizes range from 78 to 900 edges.
"""
from __future__ import annotations

from collections.abc import Callable

import networkx as nx

from src.graph.graph import Graph, GraphError

_SEED = 20230501

_BUILDERS: dict[str, Callable[[], nx.Graph]] = {
    "karate": nx.karate_club_graph,
    "les-miserables": nx.les_miserables_graph,
    "davis-southern-women": nx.davis_southern_women_graph,
    "grid-10x10": lambda: nx.grid_2d_graph(10, 10),
    "hypercube-6": lambda: nx.hypercube_graph(6),
    "caveman-10x6": lambda: nx.connected_caveman_graph(10, 6),
    "gnm-150-400": lambda: nx.gnm_random_graph(150, 400, seed=_SEED),
    "barabasi-albert-200-3": lambda: nx.barabasi_albert_graph(200, 3, seed=_SEED),
    "powerlaw-cluster-250-2": lambda: nx.powerlaw_cluster_graph(250, 2, 0.3, seed=_SEED),
    "watts-strogatz-300-6": lambda: nx.watts_strogatz_graph(300, 6, 0.1, seed=_SEED),
}


def corpus_names() -> list[str]:
    return list(_BUILDERS)


def load_corpus_graph(name: str) -> Graph:
    """Build the named instance.

    Raises:
        GraphError: If ``name`` is not a bundled instance.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(_BUILDERS)
        raise GraphError(f"unknown corpus instance '{name}' (known: {known})") from None
    return Graph.from_networkx(nx.Graph(builder()))
