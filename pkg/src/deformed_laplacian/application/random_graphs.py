#!/usr/bin/env python3
"""
Seeded random instance generators for the verification suites.

All generators take a numpy Generator so a run is reproducible from its seed.
"""

import networkx as nx
import numpy as np

from deformed_laplacian.domain.graph import Graph
from deformed_laplacian.domain.hjoin import ComponentSpec, HJoinSpec

__version__ = "0.1.0"
__author__ = "John Ayers"


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "random_graphs",
        "description": "Seeded random graph and H-join generators",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def random_tree(rng: np.random.Generator, n: int) -> Graph:
    """Uniform random labelled tree on n vertices from a Prüfer sequence."""
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    sequence = [int(v) for v in rng.integers(0, n, size=n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return Graph.from_edges(n, tree.edges())


def random_connected(rng: np.random.Generator, n: int, extra_edge_prob: float = 0.3) -> Graph:
    """Random connected graph: a random spanning tree plus independent extra edges."""
    graph = random_tree(rng, n)
    extra = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not graph.has_edge(u, v) and rng.random() < extra_edge_prob
    ]
    return Graph.from_edges(n, [*graph.sorted_edges, *extra])


def random_bipartite(rng: np.random.Generator, n: int, edge_prob: float = 0.4) -> Graph:
    """Random bipartite graph on n vertices with a random split.

    Cross edges appear independently; the graph may be disconnected.
    """
    left = rng.permutation(n)[: int(rng.integers(1, n)) if n > 1 else 1]
    in_left = np.zeros(n, dtype=bool)
    in_left[left] = True
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if in_left[u] != in_left[v] and rng.random() < edge_prob
    ]
    return Graph.from_edges(n, pairs)


def random_component(rng: np.random.Generator, max_order: int) -> ComponentSpec:
    """Random regular component: complete, cycle, single edge or empty graph."""
    choices = ["complete", "empty", "path"]
    if max_order >= 3:
        choices.append("cycle")
    family = str(rng.choice(choices))
    match family:
        case "complete":
            return ComponentSpec("complete", int(rng.integers(1, min(max_order, 5) + 1)))
        case "empty":
            return ComponentSpec("empty", int(rng.integers(1, min(max_order, 4) + 1)))
        case "cycle":
            return ComponentSpec("cycle", int(rng.integers(3, min(max_order, 7) + 1)))
    return ComponentSpec("path", 2 if max_order >= 2 else 1)


def random_hjoin_spec(rng: np.random.Generator, max_r: int = 4, max_total: int = 24) -> HJoinSpec:
    """Random H-join: connected template with r <= max_r and total order <= max_total."""
    r = int(rng.integers(1, max_r + 1))
    h = random_connected(rng, r, extra_edge_prob=0.5)
    components = []
    budget = max_total
    for remaining in range(r, 0, -1):
        component = random_component(rng, max(1, budget - (remaining - 1)))
        components.append(component)
        budget -= component.n
    return HJoinSpec(h=h, components=tuple(components))


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
