#!/usr/bin/env python3
"""
Configuration management for deformed-laplacian.

Numerical tolerances, solver choice and output precision are read from the
environment and may be overridden by command-line flags.
"""

import os
from dataclasses import dataclass, replace
from typing import Any

from deformed_laplacian.domain.dense_eigen import SOLVERS

__version__ = "0.1.0"
__author__ = "John Ayers"


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "config",
        "description": "Configuration management",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def _env_float(name: str, default: float) -> float:
    value = _env_optional_float(name)
    return default if value is None else value


def _env_optional_float(name: str) -> float | None:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be a number, got '{raw}'") from e


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got '{raw}'") from e


@dataclass
class SpectralConfig:
    """Numerical settings.

    Attributes:
        tol: Bisection accuracy
        eps_zero: Fixed zero threshold for tree diagonalization (None = scaled default)
        group_tol: Multiplicity grouping tolerance for reports
        solver: Dense eigensolver backend ("jacobi" or "lapack")
        workers: Thread count for sweeps
        precision: Significant digits for printed numbers
    """

    tol: float = 1e-10
    eps_zero: float | None = None
    group_tol: float = 1e-7
    solver: str = "jacobi"
    workers: int = 1
    precision: int = 9

    def __post_init__(self) -> None:
        """Validate settings."""
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.eps_zero is not None and self.eps_zero < 0:
            raise ValueError("eps_zero cannot be negative")
        if self.group_tol < 0:
            raise ValueError("group_tol cannot be negative")
        if self.solver not in SOLVERS:
            raise ValueError(f"solver must be one of {', '.join(SOLVERS)}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if not 1 <= self.precision <= 17:
            raise ValueError("precision must be between 1 and 17")

    @classmethod
    def from_env(cls) -> "SpectralConfig":
        """Load configuration from environment variables.

        Returns:
            SpectralConfig instance

        Raises:
            ValueError: If a variable holds an invalid value
        """
        return cls(
            tol=_env_float("DEFORMED_TOL", 1e-10),
            eps_zero=_env_optional_float("DEFORMED_EPS_ZERO"),
            group_tol=_env_float("DEFORMED_GROUP_TOL", 1e-7),
            solver=os.getenv("DEFORMED_SOLVER", "jacobi").lower(),
            workers=_env_int("DEFORMED_WORKERS", 1),
            precision=_env_int("DEFORMED_PRECISION", 9),
        )

    def with_overrides(self, **overrides: Any) -> "SpectralConfig":
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    def fmt(self, value: float) -> str:
        """Format a number at the configured precision."""
        return f"{value:.{self.precision}g}"


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
