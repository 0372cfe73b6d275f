"""Unit tests for closed-form spectra of symmetric H-joins."""

import pytest

from deformed_laplacian.domain.closed_forms import (
    closed_form_c4_palindrome,
    closed_form_p3_symmetric,
    closed_form_p4_palindrome,
)
from deformed_laplacian.domain.errors import PreconditionError
from deformed_laplacian.domain.graph import cycle, path
from deformed_laplacian.domain.hjoin import ComponentSpec, HJoinSpec, hjoin_spectrum
from deformed_laplacian.domain.spectrum import Spectrum, max_multiset_deviation

S_VALUES = [-1.5, -1.0, -0.5, 0.0, 0.3, 1.0, 2.0]


@pytest.mark.parametrize("s", S_VALUES)
def test_p3_symmetric_matches_general(s: float, p3_join: HJoinSpec) -> None:
    """Test the P3 closed form against the block and quotient spectrum."""
    closed = closed_form_p3_symmetric(p3_join, s)
    general = hjoin_spectrum(p3_join, s)

    assert max_multiset_deviation(closed, general) <= 1e-9 * max(1.0, general.largest)


@pytest.mark.parametrize("s", S_VALUES)
def test_p4_palindrome_matches_general(s: float, p4_join: HJoinSpec) -> None:
    """Test the P4 closed form against the block and quotient spectrum."""
    closed = closed_form_p4_palindrome(p4_join, s)
    general = hjoin_spectrum(p4_join, s)

    assert max_multiset_deviation(closed, general) <= 1e-9 * max(1.0, general.largest)


@pytest.mark.parametrize("s", S_VALUES)
def test_c4_palindrome_matches_general(s: float, c4_join: HJoinSpec) -> None:
    """Test the C4 closed form against the block and quotient spectrum."""
    closed = closed_form_c4_palindrome(c4_join, s)
    general = hjoin_spectrum(c4_join, s)

    assert max_multiset_deviation(closed, general) <= 1e-9 * max(1.0, general.largest)


def test_p3_laplacian_values(p3_join: HJoinSpec) -> None:
    """Test the closed form reproduces the Laplacian spectrum of the P3 example."""
    expected = Spectrum.from_values([0, 2, 3, 3, 4, 4, 5, 5, 6, 6, 12, 12])

    assert max_multiset_deviation(closed_form_p3_symmetric(p3_join, 1.0), expected) <= 1e-9


def test_p4_quotient_roots_present(p4_join: HJoinSpec) -> None:
    """Test that 0, 2, 5 and 9 appear in the P4 Laplacian spectrum."""
    spectrum = closed_form_p4_palindrome(p4_join, 1.0)

    for root in (0.0, 2.0, 5.0, 9.0):
        assert spectrum.count_equal(root, 1e-9) >= 1


def test_p3_requires_equal_outer_degrees() -> None:
    """Test the degree hypothesis of the P3 closed form."""
    spec = HJoinSpec(
        h=path(3),
        components=(
            ComponentSpec("complete", 4),
            ComponentSpec("path", 2),
            ComponentSpec("cycle", 5),
        ),
    )

    with pytest.raises(PreconditionError):
        closed_form_p3_symmetric(spec, 1.0)


def test_p3_with_different_outer_orders() -> None:
    """Test that equal degrees suffice even when n_1 differs from n_3."""
    spec = HJoinSpec(
        h=path(3),
        components=(
            ComponentSpec("cycle", 3),
            ComponentSpec("complete", 3),
            ComponentSpec("cycle", 7),
        ),
    )

    for s in (-0.8, 1.4):
        deviation = max_multiset_deviation(
            closed_form_p3_symmetric(spec, s), hjoin_spectrum(spec, s)
        )
        assert deviation <= 1e-9 * max(1.0, hjoin_spectrum(spec, s).largest)


def test_template_preconditions(p3_join: HJoinSpec, p4_join: HJoinSpec) -> None:
    """Test that each closed form checks its template."""
    with pytest.raises(PreconditionError):
        closed_form_p3_symmetric(p4_join, 1.0)
    with pytest.raises(PreconditionError):
        closed_form_p4_palindrome(p3_join, 1.0)
    with pytest.raises(PreconditionError):
        closed_form_c4_palindrome(p4_join, 1.0)


def test_palindrome_precondition() -> None:
    """Test that non-palindromic components are rejected."""
    components = (
        ComponentSpec("path", 2),
        ComponentSpec("cycle", 3),
        ComponentSpec("cycle", 4),
        ComponentSpec("path", 2),
    )

    with pytest.raises(PreconditionError):
        closed_form_p4_palindrome(HJoinSpec(h=path(4), components=components), 1.0)
    with pytest.raises(PreconditionError):
        closed_form_c4_palindrome(HJoinSpec(h=cycle(4), components=components), 1.0)


def test_palindrome_accepts_cospectral_twins() -> None:
    """Test that a twin given by its adjacency spectrum still counts as equal."""
    spec = HJoinSpec(
        h=path(4),
        components=(
            ComponentSpec("path", 2),
            ComponentSpec("cycle", 3),
            ComponentSpec("spectrum", 3, values=(2.0, -1.0, -1.0), degree=2),
            ComponentSpec("path", 2),
        ),
    )

    closed = closed_form_p4_palindrome(spec, 0.6)

    assert max_multiset_deviation(closed, hjoin_spectrum(spec, 0.6)) <= 1e-9
