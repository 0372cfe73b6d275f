"""Unit tests for SpectrumService."""

import logging

import pytest

from deformed_laplacian.application.spectrum_service import (
    SpectrumService,
    matching_closed_form,
)
from deformed_laplacian.domain.errors import ParameterError, StructureError
from deformed_laplacian.domain.graph import Graph, cycle, path, star
from deformed_laplacian.domain.hjoin import ComponentSpec, HJoinSpec
from deformed_laplacian.infrastructure.config import SpectralConfig


def test_spectrum_report(wheel_graph: Graph) -> None:
    """Test the spectrum report of the five-vertex example at s = 0.75."""
    report = SpectrumService().spectrum_report(wheel_graph, 0.75)

    assert report.n == 5
    assert report.m == 8
    assert report.lambda_max == pytest.approx(3.625, abs=1e-6)
    assert report.trace == pytest.approx(report.trace_identity)
    assert report.average == pytest.approx(2.2375)
    assert report.lower_bound is None
    assert report.upper_bound >= report.lambda_max
    assert report.classification.label == "sub-laplacian"


def test_spectrum_report_lower_bound(wheel_graph: Graph) -> None:
    """Test that the lower bound is reported in the super-Laplacian range."""
    report = SpectrumService().spectrum_report(wheel_graph, 1.5)

    assert report.lower_bound is not None
    assert report.lower_bound <= report.lambda_max


def test_spectrum_report_disconnected_graph() -> None:
    """Test that a disconnected graph gets no lower bound."""
    g = Graph.from_edges(4, [(0, 1), (2, 3)])

    report = SpectrumService().spectrum_report(g, 2.0)

    assert report.lower_bound is None
    assert len(report.spectrum) == 4


def test_spectrum_report_formatting(wheel_graph: Graph) -> None:
    """Test text rendering of spectra and bounds."""
    config = SpectralConfig()
    report = SpectrumService(config).spectrum_report(wheel_graph, 0.75)

    spectrum_lines = report.format_spectrum(config.fmt).splitlines()
    bounds_text = report.format_bounds(config.fmt)

    assert len(spectrum_lines) == 5
    assert spectrum_lines[-1] == "3.625"
    assert "lower bound:  n/a" in bounds_text
    assert "lambda_max:   3.625" in bounds_text
    assert report.to_dict()["schema"] == 1


def test_tree_operations() -> None:
    """Test locate, radius and kth on a path."""
    service = SpectrumService()
    g = path(4)

    counts = service.tree_locate(g, 1.0, 0.0)
    radius = service.tree_radius(g, 1.0)
    second = service.tree_kth(g, 1.0, 2)

    assert (counts.greater, counts.equal, counts.less) == (3, 1, 0)
    assert radius == pytest.approx(2 + 2**0.5, abs=1e-8)
    assert second == pytest.approx(2 - 2**0.5, abs=1e-8)


def test_tree_operations_with_root() -> None:
    """Test that the chosen root does not change the counts."""
    service = SpectrumService()

    assert service.tree_locate(star(4), 1.0, 1.0, root=3) == service.tree_locate(star(4), 1.0, 1.0)


def test_tree_operations_reject_non_tree() -> None:
    """Test that cyclic graphs are rejected."""
    with pytest.raises(StructureError, match="not a tree"):
        SpectrumService().tree_radius(cycle(4), 1.0)


def test_tree_props() -> None:
    """Test the checklist through the service."""
    service = SpectrumService()

    assert service.tree_props(star(4), 1.0).passed
    with pytest.raises(ParameterError):
        service.tree_props(Graph(n=1), 1.0)


def test_matching_closed_form(
    p3_join: HJoinSpec, p4_join: HJoinSpec, c4_join: HJoinSpec
) -> None:
    """Test closed-form selection by template."""
    assert matching_closed_form(p3_join)[0] == "p3-symmetric"  # type: ignore[index]
    assert matching_closed_form(p4_join)[0] == "p4-palindrome"  # type: ignore[index]
    assert matching_closed_form(c4_join)[0] == "c4-palindrome"  # type: ignore[index]
    single = HJoinSpec(h=path(1), components=(ComponentSpec("cycle", 3),))
    assert matching_closed_form(single) is None


def test_hjoin_report_verified(p3_join: HJoinSpec) -> None:
    """Test the H-join report with the dense oracle."""
    report = SpectrumService().hjoin_report(p3_join, 1.0, verify=True)

    assert report.verified
    assert report.oracle_deviation is not None
    assert report.oracle_deviation <= 1e-8
    assert report.closed_form == "p3-symmetric"
    assert report.closed_form_deviation is not None
    assert report.closed_form_deviation <= 1e-9
    assert report.spectrum.total() == pytest.approx(62.0)
    assert report.to_dict()["structure"]["N"] == [2, 10, 2]


def test_hjoin_report_without_verify(c4_join: HJoinSpec) -> None:
    """Test that the oracle is skipped unless requested."""
    report = SpectrumService().hjoin_report(c4_join, -0.5)

    assert report.oracle_deviation is None
    assert report.verified
    assert "closed form c4-palindrome" in report.format_text(SpectralConfig().fmt)


def test_hjoin_report_closed_form_not_applicable(caplog: pytest.LogCaptureFixture) -> None:
    """Test that a template match with failed hypotheses skips the closed form."""
    spec = HJoinSpec(
        h=path(3),
        components=(
            ComponentSpec("complete", 4),
            ComponentSpec("path", 2),
            ComponentSpec("cycle", 5),
        ),
    )

    with caplog.at_level(logging.DEBUG, logger="deformed_laplacian"):
        report = SpectrumService().hjoin_report(spec, 0.5)

    assert report.closed_form is None
    assert "not applicable" in caplog.text
