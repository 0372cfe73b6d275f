"""Unit tests for SweepService."""

import pytest

from deformed_laplacian.application.sweep_service import SweepService
from deformed_laplacian.domain.errors import ParameterError, StructureError
from deformed_laplacian.domain.graph import Graph, path
from deformed_laplacian.domain.hjoin import ComponentSpec, HJoinSpec
from deformed_laplacian.infrastructure.config import SpectralConfig


def test_sweep_graph_single_edge() -> None:
    """Test the eigenvalues 1 - s and 1 + s of a single edge."""
    rows = SweepService().sweep_graph(path(2), -1.0, 1.0, 3)

    assert [row.s for row in rows] == [-1.0, 0.0, 1.0]
    assert rows[0].eigenvalues == pytest.approx((0.0, 2.0), abs=1e-9)
    assert rows[1].eigenvalues == pytest.approx((1.0, 1.0), abs=1e-9)
    assert rows[2].eigenvalues == pytest.approx((0.0, 2.0), abs=1e-9)


def test_sweep_graph_progress_callback(wheel_graph: Graph) -> None:
    """Test that progress is reported once per sample."""
    calls: list[tuple[int, int]] = []

    rows = SweepService().sweep_graph(
        wheel_graph, 0.0, 2.0, 5, progress_callback=lambda done, total: calls.append((done, total))
    )

    assert len(rows) == 5
    assert calls == [(1, 5), (2, 5), (3, 5), (4, 5), (5, 5)]


def test_sweep_graph_workers_match_serial(wheel_graph: Graph) -> None:
    """Test that the thread pool gives the same sorted rows."""
    serial = SweepService().sweep_graph(wheel_graph, -2.0, 2.0, 9)
    threaded = SweepService(SpectralConfig(workers=4)).sweep_graph(wheel_graph, -2.0, 2.0, 9)

    assert [row.s for row in threaded] == [row.s for row in serial]
    for a, b in zip(serial, threaded, strict=True):
        assert a.eigenvalues == pytest.approx(b.eigenvalues, abs=1e-9)


def test_sweep_hjoin(p3_join: HJoinSpec) -> None:
    """Test that the H-join sweep returns all n eigenvalues."""
    rows = SweepService().sweep_hjoin(p3_join, 0.0, 1.0, 2)

    assert len(rows) == 2
    assert len(rows[1].eigenvalues) == 12
    assert sum(rows[1].eigenvalues) == pytest.approx(62.0)


@pytest.mark.parametrize(("s_from", "s_to", "steps"), [(1.0, 1.0, 3), (2.0, 1.0, 3), (0.0, 1.0, 1)])
def test_sweep_rejects_bad_ranges(s_from: float, s_to: float, steps: int) -> None:
    """Test parameter validation."""
    with pytest.raises(ParameterError):
        SweepService().sweep_graph(path(3), s_from, s_to, steps)


def test_sweep_hjoin_rejects_invalid_spec() -> None:
    """Test that a component count mismatch is a structure error."""
    spec = HJoinSpec(h=path(3), components=(ComponentSpec("cycle", 3),))

    with pytest.raises(StructureError):
        SweepService().sweep_hjoin(spec, 0.0, 1.0, 2)


def test_sweep_graph_workers_report_progress(wheel_graph: Graph) -> None:
    """Test that the thread pool reports each completed sample once, in order."""
    calls: list[tuple[int, int]] = []
    service = SweepService(SpectralConfig(workers=3))

    service.sweep_graph(
        wheel_graph, 0.0, 1.0, 6, progress_callback=lambda done, total: calls.append((done, total))
    )

    assert calls == [(k, 6) for k in range(1, 7)]
