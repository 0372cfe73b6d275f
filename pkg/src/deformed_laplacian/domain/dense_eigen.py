#!/usr/bin/env python3
"""
Dense symmetric eigensolver used as the reference oracle.

The default backend is the cyclic Jacobi method. Each sweep visits every
off-diagonal pair once using a round-robin schedule, so the rotations within
one round touch disjoint rows and columns and are applied together as numpy
array operations. LAPACK (numpy.linalg.eigvalsh) is available as an
independent second backend.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from deformed_laplacian.domain.errors import NumericError, ParameterError
from deformed_laplacian.domain.graph import Graph
from deformed_laplacian.domain.spectrum import DEFAULT_GROUP_TOL, Spectrum

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

JACOBI = "jacobi"
LAPACK = "lapack"
SOLVERS = (JACOBI, LAPACK)

OFF_DIAGONAL_TOL = 1e-13
MAX_SWEEPS = 100


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "dense_eigen",
        "description": "Dense symmetric eigensolver oracle",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Read-only dense symmetric matrix.

    The stored array is built from the upper triangle of the input and
    mirrored, so entry(i, j) == entry(j, i) holds bit for bit.

    Attributes:
        entries: n x n float64 array (read-only)
    """

    entries: np.ndarray

    @classmethod
    def from_array(cls, array: np.ndarray | list[list[float]]) -> "SymMatrix":
        """Create a symmetric matrix from a square array.

        Args:
            array: Square array; only the upper triangle is read

        Returns:
            SymMatrix instance

        Raises:
            ParameterError: If the array is not square
            NumericError: If any entry is NaN or infinite
        """
        data = np.asarray(array, dtype=float)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ParameterError(f"matrix must be square, got shape {data.shape}")
        if not np.all(np.isfinite(data)):
            raise NumericError("matrix contains non-finite entries")
        upper = np.triu(data)
        mirrored = upper + np.triu(data, 1).T
        mirrored.setflags(write=False)
        return cls(entries=mirrored)

    @property
    def n(self) -> int:
        """Dimension."""
        return int(self.entries.shape[0])

    def entry(self, i: int, j: int) -> float:
        """Entry (i, j)."""
        return float(self.entries[i, j])

    def trace(self) -> float:
        """Sum of diagonal entries."""
        return float(np.trace(self.entries))

    def conjugate(self, signs: np.ndarray) -> "SymMatrix":
        """Return U·M·U for the diagonal sign matrix U = diag(signs)."""
        return SymMatrix.from_array(self.entries * np.outer(signs, signs))

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        return SymMatrix.from_array(self.entries - other.entries)


@lru_cache(maxsize=128)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Rounds of disjoint index pairs covering every pair (p, q) exactly once.

    Player 0 stays fixed while the others rotate; odd n gets a dummy player
    whose pairings are dropped.
    """
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p_idx, q_idx = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                p_idx.append(min(a, b))
                q_idx.append(max(a, b))
        rounds.append((np.array(p_idx, dtype=np.intp), np.array(q_idx, dtype=np.intp)))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigenvalues(
    array: np.ndarray, tol: float = OFF_DIAGONAL_TOL, max_sweeps: int = MAX_SWEEPS
) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    tol * (1 + ||A||_F) or after max_sweeps.

    Args:
        array: Symmetric n x n array
        tol: Relative off-diagonal threshold
        max_sweeps: Sweep limit

    Returns:
        Eigenvalues sorted ascending
    """
    a = np.array(array, dtype=float, copy=True)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()

    threshold = tol * (1.0 + float(np.linalg.norm(a)))
    rounds = _round_robin(n)
    sweeps = 0
    while _off_norm(a) >= threshold:
        if sweeps == max_sweeps:
            logger.warning(
                f"Jacobi stopped after {sweeps} sweeps with off-diagonal norm {_off_norm(a):.3e}"
            )
            break
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not np.any(active):
                continue
            safe = np.where(active, apq, 1.0)
            theta = (a[q, q] - a[p, p]) / (2.0 * safe)
            t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            t = np.where(active, t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            sn = t * c

            col_p = a[:, p].copy()
            col_q = a[:, q].copy()
            a[:, p] = col_p * c - col_q * sn
            a[:, q] = col_p * sn + col_q * c

            row_p = a[p, :].copy()
            row_q = a[q, :].copy()
            a[p, :] = c[:, None] * row_p - sn[:, None] * row_q
            a[q, :] = sn[:, None] * row_p + c[:, None] * row_q

            a[p, q] = 0.0
            a[q, p] = 0.0
        sweeps += 1

    logger.debug(f"Jacobi converged: n={n} sweeps={sweeps}")
    return np.sort(a.diagonal())


def eigenvalues(m: SymMatrix, solver: str = JACOBI) -> np.ndarray:
    """Sorted eigenvalues of m using the selected backend.

    Raises:
        ParameterError: If m is empty or solver is unknown
    """
    if m.n < 1:
        raise ParameterError("matrix dimension must be at least 1")
    if solver == JACOBI:
        return jacobi_eigenvalues(m.entries)
    if solver == LAPACK:
        return np.sort(np.linalg.eigvalsh(m.entries))
    raise ParameterError(f"unknown solver '{solver}' (choose from {', '.join(SOLVERS)})")


def symmetric_spectrum(
    m: SymMatrix, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Full spectrum of a symmetric matrix.

    Args:
        m: Symmetric matrix with n >= 1
        solver: "jacobi" or "lapack"
        group_tol: Multiplicity grouping tolerance attached to the result

    Returns:
        Spectrum with n values sorted ascending
    """
    return Spectrum.from_values(eigenvalues(m, solver), group_tol=group_tol)


def largest_eigenvalue(m: SymMatrix, solver: str = JACOBI) -> float:
    """Largest eigenvalue of m (the spectral radius as used throughout this package)."""
    return float(eigenvalues(m, solver)[-1])


def adjacency_spectral_radius(g: Graph, solver: str = JACOBI) -> float:
    """Largest adjacency eigenvalue of g (0 for graphs without edges)."""
    if g.m == 0:
        return 0.0
    return largest_eigenvalue(SymMatrix.from_array(g.adjacency_matrix()), solver)


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
