"""Unit tests for the Spectrum multiset."""

import pytest

from deformed_laplacian.domain.errors import ConsistencyError
from deformed_laplacian.domain.spectrum import (
    Spectrum,
    max_multiset_deviation,
    spectra_equal,
    union,
)


def test_from_values_sorts() -> None:
    """Test that values are stored ascending."""
    spectrum = Spectrum.from_values([3.0, -1.0, 2.0])

    assert spectrum.values == (-1.0, 2.0, 3.0)
    assert spectrum.smallest == -1.0
    assert spectrum.largest == 3.0
    assert len(spectrum) == 3
    assert spectrum.total() == pytest.approx(4.0)


def test_unsorted_values_rejected() -> None:
    """Test direct construction with unsorted values."""
    with pytest.raises(ValueError, match="ascending"):
        Spectrum(values=(2.0, 1.0))


def test_grouped_multiplicities() -> None:
    """Test grouping of nearly equal values."""
    spectrum = Spectrum.from_values([1.0, 1.0 + 1e-10, 2.0, 3.0, 3.0, 3.0])

    grouped = spectrum.grouped()

    assert [mult for _, mult in grouped] == [2, 1, 3]
    assert grouped[0][0] == pytest.approx(1.0)


def test_format_grouped() -> None:
    """Test rendering with multiplicities."""
    spectrum = Spectrum.from_values([1.0, 1.0, 2.5])

    assert spectrum.format_grouped() == "{1^[2], 2.5}"


def test_counts_around_threshold() -> None:
    """Test counting values above, at and below a threshold."""
    spectrum = Spectrum.from_values([0.0, 1.0, 1.0, 2.0])

    assert spectrum.count_greater(1.0) == 1
    assert spectrum.count_less(1.0) == 1
    assert spectrum.count_equal(1.0) == 2


def test_without_nearest() -> None:
    """Test removing the closest value."""
    spectrum = Spectrum.from_values([1.0, 2.0, 3.0])

    reduced = spectrum.without_nearest(2.0 + 1e-12, 1e-9)

    assert reduced.values == (1.0, 3.0)


def test_without_nearest_too_far() -> None:
    """Test that a distant target is a consistency failure."""
    spectrum = Spectrum.from_values([1.0, 2.0])

    with pytest.raises(ConsistencyError):
        spectrum.without_nearest(1.5, 1e-6)
    with pytest.raises(ConsistencyError):
        Spectrum(values=()).without_nearest(0.0, 1.0)


def test_union_and_comparison() -> None:
    """Test multiset union and elementwise comparison."""
    a = Spectrum.from_values([2.0, 0.0])
    b = Spectrum.from_values([1.0])

    merged = union([a, b])

    assert merged.values == (0.0, 1.0, 2.0)
    assert spectra_equal(merged, Spectrum.from_values([0.0, 1.0, 2.0 + 1e-12]), 1e-9)
    assert not spectra_equal(merged, a, 1e-9)
    assert max_multiset_deviation(merged, a) == float("inf")
    assert max_multiset_deviation(Spectrum(values=()), Spectrum(values=())) == 0.0
