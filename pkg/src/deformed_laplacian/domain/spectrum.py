#!/usr/bin/env python3
"""
Spectrum value type.

A Spectrum is the sorted multiset of real eigenvalues of a symmetric matrix,
together with the tolerance used to group nearly equal values when reporting
multiplicities.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from deformed_laplacian.domain.errors import ConsistencyError

__version__ = "0.1.0"
__author__ = "John Ayers"

DEFAULT_GROUP_TOL = 1e-7


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "spectrum",
        "description": "Sorted eigenvalue multiset",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass(frozen=True)
class Spectrum:
    """Immutable sorted multiset of real eigenvalues.

    Attributes:
        values: Eigenvalues in ascending order
        group_tol: Absolute gap under which neighbouring values count as one
            eigenvalue when reporting multiplicities
    """

    values: tuple[float, ...]
    group_tol: float = DEFAULT_GROUP_TOL

    def __post_init__(self) -> None:
        """Validate ordering."""
        if any(b < a for a, b in zip(self.values, self.values[1:], strict=False)):
            raise ValueError("spectrum values must be sorted ascending")
        if self.group_tol < 0:
            raise ValueError("group_tol cannot be negative")

    @classmethod
    def from_values(
        cls, values: Iterable[float], group_tol: float = DEFAULT_GROUP_TOL
    ) -> "Spectrum":
        """Create a spectrum from unsorted values.

        Args:
            values: Eigenvalues in any order
            group_tol: Multiplicity grouping tolerance

        Returns:
            Spectrum instance
        """
        ordered = np.sort(np.asarray(list(values), dtype=float))
        return cls(values=tuple(float(v) for v in ordered), group_tol=group_tol)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        """Eigenvalues as a float64 array."""
        return np.asarray(self.values, dtype=float)

    @property
    def smallest(self) -> float:
        """Minimum eigenvalue."""
        return self.values[0]

    @property
    def largest(self) -> float:
        """Maximum eigenvalue."""
        return self.values[-1]

    def total(self) -> float:
        """Sum of eigenvalues (trace of the source matrix)."""
        return float(np.sum(self.as_array()))

    def grouped(self) -> list[tuple[float, int]]:
        """Group values into (representative, multiplicity) pairs.

        Neighbouring values closer than group_tol are chained into one group;
        the representative is the group mean.

        Returns:
            List of (value, multiplicity) in ascending order
        """
        groups: list[list[float]] = []
        for value in self.values:
            if groups and value - groups[-1][-1] <= self.group_tol:
                groups[-1].append(value)
            else:
                groups.append([value])
        return [(float(np.mean(g)), len(g)) for g in groups]

    def count_greater(self, threshold: float, tol: float | None = None) -> int:
        """Number of eigenvalues above threshold + tol."""
        margin = self.group_tol if tol is None else tol
        return int(np.count_nonzero(self.as_array() > threshold + margin))

    def count_less(self, threshold: float, tol: float | None = None) -> int:
        """Number of eigenvalues below threshold - tol."""
        margin = self.group_tol if tol is None else tol
        return int(np.count_nonzero(self.as_array() < threshold - margin))

    def count_equal(self, threshold: float, tol: float | None = None) -> int:
        """Number of eigenvalues within tol of threshold."""
        return len(self) - self.count_greater(threshold, tol) - self.count_less(threshold, tol)

    def without_nearest(self, target: float, max_gap: float) -> "Spectrum":
        """Remove the single value closest to target.

        Args:
            target: Value expected in the multiset
            max_gap: Largest accepted distance between target and its match

        Returns:
            New spectrum with one element fewer

        Raises:
            ConsistencyError: If no value lies within max_gap of target
        """
        array = self.as_array()
        if array.size == 0:
            raise ConsistencyError(f"cannot remove {target} from an empty spectrum")
        index = int(np.argmin(np.abs(array - target)))
        gap = abs(array[index] - target)
        if gap > max_gap:
            raise ConsistencyError(
                f"closest eigenvalue to {target:.12g} is {array[index]:.12g} (gap {gap:.3e})"
            )
        remaining = self.values[:index] + self.values[index + 1 :]
        return Spectrum(values=remaining, group_tol=self.group_tol)

    def format_grouped(self, precision: int = 9) -> str:
        """Render as ``value^[m], ...`` with multiplicities above one."""
        parts = []
        for value, mult in self.grouped():
            text = f"{value:.{precision}g}"
            parts.append(f"{text}^[{mult}]" if mult > 1 else text)
        return "{" + ", ".join(parts) + "}"


def union(spectra: Iterable[Spectrum], group_tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Multiset union of several spectra."""
    values: list[float] = []
    for spectrum in spectra:
        values.extend(spectrum.values)
    return Spectrum.from_values(values, group_tol=group_tol)


def spectra_equal(a: Spectrum, b: Spectrum, tol: float) -> bool:
    """Compare two spectra elementwise after sorting.

    Args:
        a: First spectrum
        b: Second spectrum
        tol: Largest accepted absolute difference per element

    Returns:
        True if both have the same length and every pair is within tol
    """
    if len(a) != len(b):
        return False
    return max_multiset_deviation(a, b) <= tol


def max_multiset_deviation(a: Spectrum, b: Spectrum) -> float:
    """Largest elementwise gap between two sorted spectra (inf on length mismatch)."""
    if len(a) != len(b):
        return float("inf")
    if len(a) == 0:
        return 0.0
    return float(np.max(np.abs(a.as_array() - b.as_array())))


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
