"""Shared pytest fixtures for deformed-laplacian tests."""

import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

from deformed_laplacian.domain.graph import Graph, cycle, path
from deformed_laplacian.domain.hjoin import ComponentSpec, HJoinSpec
from deformed_laplacian.infrastructure.config import SpectralConfig
from deformed_laplacian.infrastructure.edge_list_repository import EdgeListRepository
from deformed_laplacian.infrastructure.hjoin_spec_repository import HJoinSpecRepository


@pytest.fixture(autouse=True)
def reset_package_logger() -> Iterator[None]:
    """Drop handlers so each test configures logging against its own streams."""
    logger = logging.getLogger("deformed_laplacian")
    logger.handlers.clear()
    yield
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def wheel_graph() -> Graph:
    """Five-vertex graph with m = 8 used for the edge-deletion example.

    Returns:
        Graph instance
    """
    return Graph.from_edges(
        5,
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)],
    )


@pytest.fixture
def p3_join() -> HJoinSpec:
    """P3-join of (C4, K2, C6).

    Returns:
        HJoinSpec instance
    """
    return HJoinSpec(
        h=path(3),
        components=(
            ComponentSpec("cycle", 4),
            ComponentSpec("path", 2),
            ComponentSpec("cycle", 6),
        ),
    )


@pytest.fixture
def p4_join() -> HJoinSpec:
    """P4-join of (K2, C3, C3, K2).

    Returns:
        HJoinSpec instance
    """
    return HJoinSpec(
        h=path(4),
        components=(
            ComponentSpec("path", 2),
            ComponentSpec("cycle", 3),
            ComponentSpec("cycle", 3),
            ComponentSpec("path", 2),
        ),
    )


@pytest.fixture
def c4_join() -> HJoinSpec:
    """C4-join of (K2, C3, C3, K2).

    Returns:
        HJoinSpec instance
    """
    return HJoinSpec(
        h=cycle(4),
        components=(
            ComponentSpec("path", 2),
            ComponentSpec("cycle", 3),
            ComponentSpec("cycle", 3),
            ComponentSpec("path", 2),
        ),
    )


@pytest.fixture
def config() -> SpectralConfig:
    """Default numerical settings.

    Returns:
        SpectralConfig instance
    """
    return SpectralConfig()


@pytest.fixture
def wheel_file(tmp_path: Path, wheel_graph: Graph) -> Path:
    """Edge-list file holding the five-vertex example graph."""
    file_path = tmp_path / "wheel.txt"
    EdgeListRepository(file_path).save(wheel_graph)
    return file_path


@pytest.fixture
def p3_join_file(tmp_path: Path, p3_join: HJoinSpec) -> Path:
    """JSON file holding the P3-join specification."""
    file_path = tmp_path / "p3_join.json"
    HJoinSpecRepository(file_path).save(p3_join)
    return file_path
