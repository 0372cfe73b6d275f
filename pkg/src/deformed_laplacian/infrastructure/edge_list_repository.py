#!/usr/bin/env python3
"""
Edge-list file reading and writing.

Format: a header line ``n m`` followed by m lines ``u v`` with 0-indexed
endpoints. Blank lines and lines starting with ``#`` are ignored.
"""

import logging
from pathlib import Path

from deformed_laplacian.domain.errors import EdgeListParseError
from deformed_laplacian.domain.graph import Edge, Graph

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "edge_list_repository",
        "description": "Edge-list file loading and saving",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def _parse_pair(tokens: list[str], line_number: int, what: str) -> tuple[int, int]:
    if len(tokens) != 2:
        raise EdgeListParseError(
            line_number, f"expected two integers for {what}, got {len(tokens)} tokens"
        )
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise EdgeListParseError(line_number, f"non-integer {what}: {' '.join(tokens)}") from e


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a graph.

    Args:
        text: File contents

    Returns:
        Graph instance

    Raises:
        EdgeListParseError: On malformed content, with the offending line number
    """
    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            header = _parse_pair(tokens, line_number, "header 'n m'")
            if header[0] < 0 or header[1] < 0:
                raise EdgeListParseError(line_number, "vertex and edge counts must be non-negative")
            continue

        u, v = _parse_pair(tokens, line_number, "edge")
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(line_number, f"endpoint outside 0..{n - 1}: {u} {v}")
        if u == v:
            raise EdgeListParseError(line_number, f"self-loop at vertex {u}")
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise EdgeListParseError(line_number, f"duplicate edge {u} {v}")
        if len(edges) == header[1]:
            raise EdgeListParseError(line_number, f"more edges than the {header[1]} declared")
        seen.add(edge)
        edges.append(edge)

    if header is None:
        raise EdgeListParseError(max(last_line, 1), "missing header 'n m'")
    if len(edges) != header[1]:
        raise EdgeListParseError(
            last_line, f"header declares {header[1]} edges but {len(edges)} were listed"
        )
    return Graph.from_edges(header[0], edges)


def format_edge_list(graph: Graph) -> str:
    """Render a graph in edge-list format with sorted edges."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges)
    return "\n".join(lines) + "\n"


class EdgeListRepository:
    """Repository for graphs stored as edge-list files."""

    def __init__(self, file_path: str | Path) -> None:
        """Initialize the repository.

        Args:
            file_path: Path to the edge-list file
        """
        self.file_path = Path(file_path)

    def load(self) -> Graph:
        """Load the graph.

        Returns:
            Graph instance

        Raises:
            FileNotFoundError: If the file doesn't exist
            EdgeListParseError: If the file is malformed
        """
        if not self.file_path.exists():
            raise FileNotFoundError(f"edge-list file not found: {self.file_path}")
        graph = parse_edge_list(self.file_path.read_text(encoding="ascii"))
        logger.debug(f"Loaded {self.file_path}: n={graph.n} m={graph.m}")
        return graph

    def save(self, graph: Graph) -> None:
        """Write the graph, creating parent directories as needed.

        Args:
            graph: Graph to store
        """
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        self.file_path.write_text(format_edge_list(graph), encoding="ascii")
        logger.debug(f"Wrote {self.file_path}: n={graph.n} m={graph.m}")


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
