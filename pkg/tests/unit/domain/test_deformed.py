"""Unit tests for the deformed Laplacian and its basic spectral facts."""

import math

import numpy as np
import pytest

from deformed_laplacian.domain.deformed import (
    average_eigenvalue,
    bipartite_conjugation,
    build_deformed,
    check_s,
    classify_s,
    deformed_spectrum,
    edge_perturbation,
    in_monotone_regime,
    lower_bound_radius,
    perturbation_matrix,
    star_spectrum,
    trace_identity,
    upper_bound_radius,
    verify_edge_monotonicity,
    verify_subgraph_monotonicity,
)
from deformed_laplacian.domain.dense_eigen import LAPACK, eigenvalues
from deformed_laplacian.domain.errors import EdgeNotFoundError, ParameterError, StructureError
from deformed_laplacian.domain.graph import Graph, complete, cycle, path, star


def test_check_s_rejects_non_finite() -> None:
    """Test that NaN and infinities are rejected."""
    assert check_s(2) == 2.0
    for bad in (float("nan"), float("inf"), -float("inf")):
        with pytest.raises(ParameterError):
            check_s(bad)


def test_build_deformed_special_values(wheel_graph: Graph) -> None:
    """Test that s = 1, -1 and 0 give L, Q and I exactly."""
    adjacency = wheel_graph.adjacency_matrix()
    degree = wheel_graph.degree_matrix()

    assert np.array_equal(build_deformed(wheel_graph, 1.0).matrix.entries, degree - adjacency)
    assert np.array_equal(build_deformed(wheel_graph, -1.0).matrix.entries, degree + adjacency)
    assert np.array_equal(build_deformed(wheel_graph, 0.0).matrix.entries, np.eye(5))


def test_build_deformed_entries(wheel_graph: Graph) -> None:
    """Test diagonal and edge entries at a generic s."""
    m = build_deformed(wheel_graph, 0.75).matrix

    assert m.entry(0, 0) == pytest.approx(1 + 0.5625 * 3)
    assert m.entry(1, 1) == pytest.approx(1 + 0.5625 * 2)
    assert m.entry(0, 1) == -0.75
    assert m.entry(1, 3) == 0.0


def test_wheel_radius_at_three_quarters(wheel_graph: Graph) -> None:
    """Test the largest eigenvalue of the five-vertex example at s = 0.75."""
    assert build_deformed(wheel_graph, 0.75).lambda_max() == pytest.approx(3.625, abs=1e-6)


def test_trace_identity(wheel_graph: Graph) -> None:
    """Test that the eigenvalue sum equals n(1 - s^2) + 2ms^2."""
    for s in (-2.0, -0.3, 0.0, 0.75, 1.0, 1.7):
        spectrum = deformed_spectrum(wheel_graph, s)
        assert spectrum.total() == pytest.approx(trace_identity(wheel_graph, s), abs=1e-8)


def test_average_eigenvalue(wheel_graph: Graph) -> None:
    """Test the average eigenvalue of the five-vertex example."""
    assert average_eigenvalue(wheel_graph, 0.75) == pytest.approx(2.2375)


def test_average_eigenvalue_of_tree() -> None:
    """Test the tree average 1 + ((n - 2)/n)s^2."""
    assert average_eigenvalue(path(6), 1.5) == pytest.approx(1 + 4 / 6 * 2.25)


def test_star_spectrum_matches_oracle() -> None:
    """Test the closed-form star spectrum against the dense oracle."""
    for leaves in (1, 2, 5, 9):
        for s in (-2.0, -0.5, 0.5, 1.0, 3.0):
            closed = star_spectrum(leaves, s)
            oracle = deformed_spectrum(star(leaves), s)
            assert np.allclose(closed.as_array(), oracle.as_array(), atol=1e-9)


def test_star_spectrum_rejects_no_leaves() -> None:
    """Test that a star needs a leaf."""
    with pytest.raises(ParameterError):
        star_spectrum(0, 1.0)


def test_lower_bound_attained_by_star() -> None:
    """Test that stars attain the lower bound."""
    for s in (-1.5, -1.0, 0.0, 1.0, 2.0):
        bound = lower_bound_radius(star(4), s)
        assert bound == pytest.approx(star_spectrum(4, s).largest, abs=1e-12)


def test_lower_bound_not_asserted_inside_unit_interval(wheel_graph: Graph) -> None:
    """Test that no bound is returned for s in (0, 1)."""
    assert lower_bound_radius(wheel_graph, 0.75) is None
    assert lower_bound_radius(wheel_graph, 1.0) is not None


def test_lower_bound_requires_connected_graph() -> None:
    """Test structural preconditions of the lower bound."""
    with pytest.raises(StructureError):
        lower_bound_radius(Graph.from_edges(4, [(0, 1), (2, 3)]), 1.0)
    with pytest.raises(ParameterError):
        lower_bound_radius(Graph(n=1), 1.0)


def test_bounds_sandwich_radius(wheel_graph: Graph) -> None:
    """Test lower <= lambda_max <= upper on the five-vertex example."""
    for s in (-1.5, -1.0, 0.0, 1.0, 2.0):
        radius = build_deformed(wheel_graph, s).lambda_max()
        lower = lower_bound_radius(wheel_graph, s)
        assert lower is not None
        assert lower <= radius + 1e-9
        assert radius <= upper_bound_radius(wheel_graph, s) + 1e-9


def test_upper_bound_at_three_quarters(wheel_graph: Graph) -> None:
    """Test the upper bound value with rho(A) = 1 + sqrt(5)."""
    expected = 1 + 0.5625 * 3 + 0.75 * (1 + math.sqrt(5))

    assert upper_bound_radius(wheel_graph, 0.75) == pytest.approx(expected)
    assert upper_bound_radius(wheel_graph, 0.75) >= 3.625


def test_classify_s() -> None:
    """Test sub/super-Laplacian classification."""
    assert classify_s(0.5).label == "sub-laplacian"
    assert classify_s(-2.0).label == "super-laplacian"
    assert classify_s(1.0).label == "laplacian"
    assert classify_s(-1.0).label == "signless-laplacian"
    assert classify_s(0.5).adapted is None


def test_classify_s_adapted() -> None:
    """Test adaptation to a reference eigenvalue."""
    result = classify_s(0.5, lam=4.0)

    assert result.adapted is True
    assert result.adapted_interval() == pytest.approx((-1.0, 1.0))
    assert classify_s(1.5, lam=4.0).adapted is False
    assert result.to_dict()["class"] == "sub-laplacian"


def test_classify_s_rejects_small_lambda() -> None:
    """Test that the reference eigenvalue must exceed 1."""
    with pytest.raises(ParameterError):
        classify_s(0.5, lam=1.0)


def test_in_monotone_regime() -> None:
    """Test the region where deleting an edge cannot raise the radius."""
    assert in_monotone_regime(-0.5)
    assert in_monotone_regime(0.0)
    assert in_monotone_regime(1.0)
    assert not in_monotone_regime(0.75)


@pytest.mark.parametrize("s", [-1.5, -1.0, -0.4, 0.0, 0.4, 0.75, 1.0, 2.0])
def test_perturbation_matrix_eigenvalues(wheel_graph: Graph, s: float) -> None:
    """Test that H(s) has eigenvalues s^2 - s, s^2 + s and zeros."""
    h = perturbation_matrix(wheel_graph, (0, 1), s)
    expected = sorted([s * s - s, s * s + s, 0.0, 0.0, 0.0])

    assert np.allclose(eigenvalues(h, LAPACK), expected, atol=1e-12)


def test_edge_perturbation() -> None:
    """Test the mean, half difference and semidefiniteness."""
    result = edge_perturbation(0.5)

    assert result.eigenvalue_low == pytest.approx(-0.25)
    assert result.eigenvalue_high == pytest.approx(0.75)
    assert result.mean == pytest.approx(0.25)
    assert result.half_difference == pytest.approx(-0.5)
    assert not result.positive_semidefinite
    assert edge_perturbation(1.0).positive_semidefinite
    assert edge_perturbation(-2.0).positive_semidefinite
    assert edge_perturbation(0.0).positive_semidefinite


def test_bipartite_conjugation() -> None:
    """Test that U M(s) U = M(-s) for a bipartite graph."""
    g = cycle(6)
    signs = bipartite_conjugation(g, 0.8)

    assert signs is not None
    conjugated = build_deformed(g, 0.8).matrix.conjugate(np.diag(signs.entries))
    assert np.array_equal(conjugated.entries, build_deformed(g, -0.8).matrix.entries)
    assert bipartite_conjugation(complete(3), 0.8) is None


def test_edge_removal_raises_radius_at_three_quarters(wheel_graph: Graph) -> None:
    """Test that deleting edge {0, 1} raises the radius at s = 0.75."""
    report = verify_edge_monotonicity(wheel_graph, (0, 1), 0.75)

    assert report.graph_radius == pytest.approx(3.625, abs=1e-6)
    assert report.subgraph_radius == pytest.approx(3.6517332, abs=1e-6)
    assert not report.holds
    assert not report.asserted
    assert report.status == "finding"
    assert report.to_dict()["edge"] == [0, 1]


def test_edge_removal_at_negative_s(wheel_graph: Graph) -> None:
    """Test that monotonicity holds for s = -0.75."""
    report = verify_edge_monotonicity(wheel_graph, (1, 0), -0.75)

    assert report.edge == (0, 1)
    assert report.asserted
    assert report.holds
    assert report.status == "pass"


def test_edge_monotonicity_missing_edge(wheel_graph: Graph) -> None:
    """Test that the edge must exist."""
    with pytest.raises(EdgeNotFoundError):
        verify_edge_monotonicity(wheel_graph, (1, 3), 1.0)


def test_subgraph_monotonicity_chain() -> None:
    """Test a chain of deletions from K5 at s = 1.5."""
    report = verify_subgraph_monotonicity(complete(5), [(0, 1), (2, 3), (1, 4)], 1.5)

    assert len(report.radii) == 4
    assert report.holds
    assert report.status == "pass"
