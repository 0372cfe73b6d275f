#!/usr/bin/env python3
"""
Parameter sweep value types.
"""

from dataclasses import dataclass

import numpy as np

from deformed_laplacian.domain.errors import ParameterError

__version__ = "0.1.0"
__author__ = "John Ayers"


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "sweep",
        "description": "Parameter sweep rows and sampling",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass(frozen=True)
class SweepRow:
    """Sorted eigenvalues of M(s) at one sampled s.

    Attributes:
        s: Deformation parameter
        eigenvalues: Ascending eigenvalues
    """

    s: float
    eigenvalues: tuple[float, ...]


def sample_points(s_from: float, s_to: float, steps: int) -> list[float]:
    """Evenly spaced s values including both ends.

    Raises:
        ParameterError: If s_from >= s_to or steps < 2
    """
    if not s_from < s_to:
        raise ParameterError(f"sweep start {s_from} must be below end {s_to}")
    if steps < 2:
        raise ParameterError("sweep needs at least 2 steps")
    return [float(v) for v in np.linspace(s_from, s_to, steps)]


def check_rows(rows: list[SweepRow]) -> None:
    """Ensure every row has the same number of eigenvalues.

    Raises:
        ParameterError: On ragged rows
    """
    widths = {len(row.eigenvalues) for row in rows}
    if len(widths) > 1:
        raise ParameterError(f"sweep rows have differing lengths {sorted(widths)}")


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
