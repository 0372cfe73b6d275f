#!/usr/bin/env python3
"""
Domain model for simple undirected graphs and rooted trees.

Provides the Graph and RootedTree value types, the standard graph families
(path, cycle, star, complete, starlike, explicit edge list) and the structural
queries the spectral code relies on: tree test, bipartition, degrees and
single-edge operations.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx
import numpy as np

from deformed_laplacian.domain.errors import EdgeNotFoundError, ParameterError, StructureError

__version__ = "0.1.0"
__author__ = "John Ayers"

Edge = tuple[int, int]


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "graph",
        "description": "Graph and rooted tree domain models",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def _canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored canonically as (u, v) with u < v, so two graphs with the
    same edge set compare equal regardless of how they were built.

    Attributes:
        n: Number of vertices
        edges: Set of canonical vertex pairs
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        """Validate vertex count and edge endpoints."""
        if self.n < 0:
            raise ParameterError("vertex count cannot be negative")
        for u, v in self.edges:
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if u > v:
                raise ParameterError(f"edge ({u}, {v}) is not canonical; use Graph.from_edges")
            if u < 0 or v >= self.n:
                raise ParameterError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from arbitrary vertex pairs.

        Args:
            n: Number of vertices
            pairs: Iterable of (u, v) pairs in any orientation

        Returns:
            Graph instance

        Raises:
            ParameterError: On self-loops, duplicate edges or out-of-range endpoints
        """
        edges: set[Edge] = set()
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            edge = _canonical(u, v)
            if edge in edges:
                raise ParameterError(f"duplicate edge {edge}")
            edges.add(edge)
        return cls(n=n, edges=frozenset(edges))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order."""
        return tuple(sorted(self.edges))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuple for every vertex."""
        adjacency: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    def degree(self, v: int) -> int:
        """Degree of vertex v."""
        return len(self.neighbors[v])

    def degrees(self) -> tuple[int, ...]:
        """Degree sequence indexed by vertex."""
        return tuple(len(nbrs) for nbrs in self.neighbors)

    def max_degree(self) -> int:
        """Maximum degree (0 for the empty graph)."""
        return max(self.degrees(), default=0)

    def average_degree(self) -> float:
        """Average degree 2m/n.

        Raises:
            ParameterError: If the graph has no vertices
        """
        if self.n == 0:
            raise ParameterError("average degree undefined for a graph without vertices")
        return 2.0 * self.m / self.n

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether {u, v} is an edge."""
        return _canonical(u, v) in self.edges

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Return a copy of this graph without edge {u, v}.

        Raises:
            EdgeNotFoundError: If the edge is absent
        """
        edge = _canonical(u, v)
        if edge not in self.edges:
            raise EdgeNotFoundError(u, v)
        return Graph(n=self.n, edges=self.edges - {edge})

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy of this graph with edge {u, v} added.

        Raises:
            ParameterError: If the edge is already present or invalid
        """
        if u == v:
            raise ParameterError(f"self-loop at vertex {u}")
        edge = _canonical(u, v)
        if edge in self.edges:
            raise ParameterError(f"edge {edge} already present")
        return Graph(n=self.n, edges=self.edges | {edge})

    def delete_vertex(self, v: int) -> "Graph":
        """Remove vertex v and its edges; vertices above v shift down by one."""
        if not 0 <= v < self.n:
            raise ParameterError(f"vertex {v} outside 0..{self.n - 1}")

        def relabel(w: int) -> int:
            return w - 1 if w > v else w

        kept = [(relabel(a), relabel(b)) for a, b in self.edges if v not in (a, b)]
        return Graph.from_edges(self.n - 1, kept)

    def pendant_vertices(self) -> list[int]:
        """Vertices of degree exactly one."""
        return [v for v, d in enumerate(self.degrees()) if d == 1]

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix as float64."""
        matrix = np.zeros((self.n, self.n))
        for u, v in self.edges:
            matrix[u, v] = 1.0
            matrix[v, u] = 1.0
        return matrix

    def degree_matrix(self) -> np.ndarray:
        """Diagonal degree matrix as float64."""
        return np.diag(np.asarray(self.degrees(), dtype=float))

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with nodes 0..n-1 and sorted edge insertion."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges)
        return graph

    def is_connected(self) -> bool:
        """Check connectivity; the graph without vertices counts as disconnected."""
        if self.n == 0:
            return False
        return bool(nx.is_connected(self.to_networkx()))

    def is_tree(self) -> bool:
        """Check that the graph is connected with exactly n - 1 edges."""
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_regular(self) -> int | None:
        """Return the common degree if every vertex has it, otherwise None."""
        degrees = set(self.degrees())
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Two-color the graph if it is bipartite.

        Each component is explored breadth-first from its lowest vertex, which
        goes in the first part, so the result is deterministic.

        Returns:
            (part1, part2) with every edge crossing the parts, or None
        """
        color: dict[int, int] = {}
        graph = self.to_networkx()
        for start in range(self.n):
            if start in color:
                continue
            color[start] = 0
            for parent, child in nx.bfs_edges(graph, start):
                color[child] = 1 - color[parent]

        if any(color[u] == color[v] for u, v in self.edges):
            return None
        part1 = frozenset(v for v, c in color.items() if c == 0)
        part2 = frozenset(v for v, c in color.items() if c == 1)
        return part1, part2

    def starlike_legs(self) -> list[int] | None:
        """Leg lengths [q_1, ..., q_k] if this is a starlike tree with k >= 3.

        A starlike tree has exactly one vertex of degree at least three and no
        other branching; each leg is the path hanging from that center.
        """
        if not self.is_tree():
            return None
        degrees = self.degrees()
        branching = [v for v, d in enumerate(degrees) if d >= 3]
        if len(branching) != 1:
            return None
        center = branching[0]
        legs = []
        for first in self.neighbors[center]:
            length, previous, current = 1, center, first
            while degrees[current] == 2:
                nxt = next(w for w in self.neighbors[current] if w != previous)
                previous, current = current, nxt
                length += 1
            legs.append(length)
        return legs


class Family(Enum):
    """Enumeration of the graph families the library can build."""

    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    STARLIKE = "starlike"
    EDGES = "edges"


@dataclass(frozen=True)
class FamilySpec:
    """Immutable description of a named graph family instance.

    Attributes:
        family: Which family to build
        sizes: Family parameters: (n,) for path/cycle/star/complete,
            leg lengths for starlike, (n,) for an explicit edge list
        edges: Explicit edge list (EDGES family only)
    """

    family: Family
    sizes: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        """Validate family parameters."""
        if not self.sizes:
            raise ParameterError(f"{self.family.value} needs at least one size parameter")
        if any(size < 1 for size in self.sizes):
            raise ParameterError(f"{self.family.value} sizes must be >= 1, got {self.sizes}")
        match self.family:
            case Family.STARLIKE:
                if len(self.sizes) < 3:
                    raise ParameterError("starlike tree needs at least 3 legs")
            case Family.CYCLE:
                if self.sizes[0] < 3:
                    raise ParameterError("cycle needs at least 3 vertices")
            case Family.EDGES:
                pass
            case _:
                if len(self.sizes) != 1:
                    raise ParameterError(f"{self.family.value} takes exactly one size")

    @classmethod
    def parse(cls, tokens: Sequence[str]) -> "FamilySpec":
        """Parse command-line style tokens such as ``["starlike", "2", "2", "2"]``.

        Raises:
            ParameterError: On unknown family names or non-integer sizes
        """
        if not tokens:
            raise ParameterError("missing family name")
        try:
            family = Family(tokens[0].lower())
        except ValueError as e:
            names = ", ".join(f.value for f in Family if f is not Family.EDGES)
            raise ParameterError(f"unknown family '{tokens[0]}' (choose from {names})") from e
        if family is Family.EDGES:
            raise ParameterError("edge-list graphs are read from files, not built by name")
        try:
            sizes = tuple(int(token) for token in tokens[1:])
        except ValueError as e:
            raise ParameterError(f"family sizes must be integers, got {list(tokens[1:])}") from e
        return cls(family=family, sizes=sizes)


def build_family(spec: FamilySpec) -> Graph:
    """Build the graph described by a family spec.

    star(n) is K_{1,n} with n + 1 vertices and the center at index 0. A
    starlike tree [q_1, ..., q_k] has its center at index 0 followed by the
    legs laid out one after another, each starting next to the center.

    Args:
        spec: Family description

    Returns:
        Graph instance
    """
    match spec.family:
        case Family.PATH:
            n = spec.sizes[0]
            return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
        case Family.CYCLE:
            n = spec.sizes[0]
            return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
        case Family.STAR:
            leaves = spec.sizes[0]
            return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
        case Family.COMPLETE:
            n = spec.sizes[0]
            return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
        case Family.STARLIKE:
            pairs: list[Edge] = []
            next_vertex = 1
            for length in spec.sizes:
                previous = 0
                for _ in range(length):
                    pairs.append((previous, next_vertex))
                    previous = next_vertex
                    next_vertex += 1
            return Graph.from_edges(next_vertex, pairs)
        case Family.EDGES:
            return Graph.from_edges(spec.sizes[0], spec.edges)
    raise ParameterError(f"unsupported family {spec.family}")


def path(n: int) -> Graph:
    """Path P_n on n vertices."""
    return build_family(FamilySpec(Family.PATH, (n,)))


def cycle(n: int) -> Graph:
    """Cycle C_n on n vertices."""
    return build_family(FamilySpec(Family.CYCLE, (n,)))


def star(leaves: int) -> Graph:
    """Star K_{1,leaves} with the center at vertex 0."""
    return build_family(FamilySpec(Family.STAR, (leaves,)))


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    return build_family(FamilySpec(Family.COMPLETE, (n,)))


def starlike(*legs: int) -> Graph:
    """Starlike tree with the given leg lengths."""
    return build_family(FamilySpec(Family.STARLIKE, tuple(legs)))


@dataclass(frozen=True)
class RootedTree:
    """Tree with a chosen root and a bottom-up vertex ordering.

    Attributes:
        graph: Underlying tree
        root: Root vertex
        order: Vertices listed so that every vertex follows all its children
        parent: Parent of each vertex (None for the root), indexed by vertex
    """

    graph: Graph
    root: int
    order: tuple[int, ...]
    parent: tuple[int | None, ...]

    def __post_init__(self) -> None:
        """Validate ordering and parent consistency."""
        if len(self.order) != self.graph.n or set(self.order) != set(range(self.graph.n)):
            raise StructureError("order must be a permutation of the vertices")
        if self.order[-1] != self.root or self.parent[self.root] is not None:
            raise StructureError("root must be last in the order and have no parent")
        position = {v: i for i, v in enumerate(self.order)}
        for v, p in enumerate(self.parent):
            if p is None:
                if v != self.root:
                    raise StructureError(f"vertex {v} has no parent but is not the root")
                continue
            if not self.graph.has_edge(v, p):
                raise StructureError(f"parent edge ({v}, {p}) not in tree")
            if position[v] >= position[p]:
                raise StructureError(f"vertex {v} appears after its parent {p}")

    @property
    def n(self) -> int:
        """Number of vertices."""
        return self.graph.n

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        """Children of each vertex, in bottom-up order."""
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v in self.order:
            p = self.parent[v]
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def position(self) -> dict[int, int]:
        """Index of each vertex in the bottom-up order."""
        return {v: i for i, v in enumerate(self.order)}


def root_and_order(graph: Graph, root: int) -> RootedTree:
    """Root a tree and produce its reverse breadth-first (bottom-up) ordering.

    Args:
        graph: A tree
        root: Vertex to use as root

    Returns:
        RootedTree whose order lists every vertex after all of its children

    Raises:
        StructureError: If graph is not a tree
        ParameterError: If root is out of range
    """
    if not graph.is_tree():
        raise StructureError("graph is not a tree")
    if not 0 <= root < graph.n:
        raise ParameterError(f"root {root} outside 0..{graph.n - 1}")

    parent: list[int | None] = [None] * graph.n
    bfs_order = [root]
    for u, v in nx.bfs_edges(graph.to_networkx(), root):
        parent[v] = u
        bfs_order.append(v)

    return RootedTree(
        graph=graph,
        root=root,
        order=tuple(reversed(bfs_order)),
        parent=tuple(parent),
    )


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
