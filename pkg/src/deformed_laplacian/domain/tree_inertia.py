#!/usr/bin/env python3
"""
Eigenvalue localization for deformed Laplacians of trees.

Diagonalize produces a diagonal matrix congruent to M_T(s) + xI in linear
time by eliminating vertices bottom-up. By Sylvester's law of inertia the
signs of the diagonal count the eigenvalues of M_T(s) above, at and below -x,
which gives exact counting, interval census and bisection for individual
eigenvalues. The path recurrence is the same elimination specialised to P_n.
"""

import logging
import math
from dataclasses import dataclass
from typing import NamedTuple

from deformed_laplacian.domain.errors import ParameterError, SingularPivotError
from deformed_laplacian.domain.graph import RootedTree

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
MAX_BISECTION_STEPS = 200
ZERO_SCALE = 1e-12
PIVOT_TOL = 1e-13


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "tree_inertia",
        "description": "Tree diagonalization, inertia counting and bisection",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def zero_tolerance(s: float, degree: int, x: float) -> float:
    """Scaled zero threshold 1e-12 * max(1, |1 + s^2(deg - 1)| + |x|)."""
    return ZERO_SCALE * max(1.0, abs(1.0 + s * s * (degree - 1)) + abs(x))


@dataclass(frozen=True)
class DiagResult:
    """Output of the tree diagonalization.

    Attributes:
        order: Vertices in the bottom-up order used
        diagonal: d_1..d_n aligned with order
        tolerances: Zero threshold applied to each diagonal entry
        n_pos: Entries above their threshold
        n_neg: Entries below minus their threshold
        n_zero: Remaining entries
        removed_edges: (child, parent) edges cut by the zero-child branch
    """

    order: tuple[int, ...]
    diagonal: tuple[float, ...]
    tolerances: tuple[float, ...]
    n_pos: int
    n_neg: int
    n_zero: int
    removed_edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        """Validate count consistency."""
        if self.n_pos + self.n_neg + self.n_zero != len(self.diagonal):
            raise ValueError("inertia counts must add up to the dimension")

    def value_at(self, vertex: int) -> float:
        """Diagonal entry assigned to a vertex."""
        return self.diagonal[self.order.index(vertex)]


class InertiaCounts(NamedTuple):
    """Eigenvalue counts relative to a threshold λ."""

    greater: int
    equal: int
    less: int


def diagonalize(t: RootedTree, s: float, x: float, eps_zero: float | None = None) -> DiagResult:
    """Diagonalize M_T(s) + xI by bottom-up elimination.

    Each vertex starts at m_ii + x. A vertex whose children are all nonzero
    subtracts s^2/d_c for each child c. If some child is zero, the lowest
    such child in the order becomes 2, the vertex becomes -s^2/2 and the edge
    to its own parent is cut, so the parent no longer sees it as a child.
    With s == 0 every edge weight vanishes and no child contributes.

    Args:
        t: Rooted tree
        s: Deformation parameter
        x: Diagonal shift
        eps_zero: Fixed zero threshold; None selects the scaled default

    Returns:
        DiagResult with diagonal and inertia counts
    """
    graph = t.graph
    s2 = s * s
    d = [1.0 + s2 * (graph.degree(v) - 1) + x for v in range(t.n)]
    eps = [
        zero_tolerance(s, graph.degree(v), x) if eps_zero is None else eps_zero for v in range(t.n)
    ]
    cut: set[int] = set()
    removed: list[tuple[int, int]] = []

    if s2 != 0.0:
        for v in t.order:
            children = [c for c in t.children[v] if c not in cut]
            if not children:
                continue
            zero_children = [c for c in children if abs(d[c]) <= eps[c]]
            if not zero_children:
                d[v] -= sum(s2 / d[c] for c in children)
                continue
            j = zero_children[0]
            d[v] = -s2 / 2.0
            d[j] = 2.0
            parent = t.parent[v]
            if parent is not None:
                cut.add(v)
                removed.append((v, parent))
                logger.debug(f"Zero child {j} at vertex {v}; cutting edge to {parent}")

    diagonal = tuple(d[v] for v in t.order)
    tolerances = tuple(eps[v] for v in t.order)
    n_pos = sum(1 for value, tol in zip(diagonal, tolerances, strict=True) if value > tol)
    n_neg = sum(1 for value, tol in zip(diagonal, tolerances, strict=True) if value < -tol)
    return DiagResult(
        order=t.order,
        diagonal=diagonal,
        tolerances=tolerances,
        n_pos=n_pos,
        n_neg=n_neg,
        n_zero=t.n - n_pos - n_neg,
        removed_edges=tuple(removed),
    )


def count_relative(
    t: RootedTree, s: float, lam: float, eps_zero: float | None = None
) -> InertiaCounts:
    """Count eigenvalues of M_T(s) above, equal to and below lam.

    Args:
        t: Rooted tree
        s: Deformation parameter
        lam: Threshold
        eps_zero: Optional fixed zero threshold

    Returns:
        InertiaCounts(greater, equal, less)
    """
    result = diagonalize(t, s, -lam, eps_zero)
    return InertiaCounts(greater=result.n_pos, equal=result.n_zero, less=result.n_neg)


def count_around(
    t: RootedTree, s: float, lam: float, delta: float, eps_zero: float | None = None
) -> InertiaCounts:
    """Count eigenvalues above, within delta of, and below lam.

    Only the shifted points lam - delta and lam + delta are diagonalized, so
    the multiplicity of an eigenvalue at lam never hinges on a pivot that is
    zero up to rounding.

    Args:
        t: Rooted tree
        s: Deformation parameter
        lam: Center, typically a known eigenvalue
        delta: Half-width; must be below the gap to the nearest other eigenvalue
        eps_zero: Optional fixed zero threshold

    Returns:
        InertiaCounts(greater, equal, less)

    Raises:
        ParameterError: If delta is not positive
    """
    if not delta > 0.0:
        raise ParameterError(f"delta must be positive, got {delta}")
    below = count_relative(t, s, lam - delta, eps_zero)
    above = count_relative(t, s, lam + delta, eps_zero)
    return InertiaCounts(
        greater=above.greater,
        equal=t.n - above.greater - below.less,
        less=below.less,
    )


def count_in_interval(
    t: RootedTree, s: float, a: float, b: float, eps_zero: float | None = None
) -> int:
    """Number of eigenvalues in the half-open interval (a, b].

    Raises:
        ParameterError: If a > b
    """
    if a > b:
        raise ParameterError(f"interval start {a} exceeds end {b}")
    above_a = count_relative(t, s, a, eps_zero).greater
    above_b = count_relative(t, s, b, eps_zero).greater
    return above_a - above_b


def _upper_bracket(t: RootedTree, s: float) -> float:
    delta = t.graph.max_degree()
    return 1.0 + s * s * (delta - 1) + abs(s) * delta + 1.0


def _lower_bracket(t: RootedTree, s: float) -> float:
    graph = t.graph
    return (
        min(1.0 + s * s * (graph.degree(v) - 1) - abs(s) * graph.degree(v) for v in range(t.n))
        - 1.0
    )


def _check_tol(tol: float) -> None:
    if not tol > 0.0:
        raise ParameterError(f"tolerance must be positive, got {tol}")


def tree_lambda_max(
    t: RootedTree, s: float, tol: float = DEFAULT_TOL, eps_zero: float | None = None
) -> float:
    """Largest eigenvalue of M_T(s) by bisection on inertia counts.

    The search keeps lambda_max inside [lo, hi], starting from lo = 1 and
    hi = 2 + s^2(Δ-1) + |s|Δ.

    Args:
        t: Rooted tree
        s: Deformation parameter
        tol: Absolute accuracy
        eps_zero: Optional fixed zero threshold

    Returns:
        lambda_max within tol
    """
    _check_tol(tol)
    if t.n == 1:
        return 1.0 - s * s
    lo, hi = 1.0, _upper_bracket(t, s)
    if count_relative(t, s, lo, eps_zero).greater == 0:
        lo, hi = _lower_bracket(t, s), lo
    steps = 0
    while hi - lo > tol and steps < MAX_BISECTION_STEPS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if count_relative(t, s, mid, eps_zero).greater >= 1:
            lo = mid
        else:
            hi = mid
        steps += 1
    logger.debug(f"lambda_max bisection: n={t.n} s={s} steps={steps}")
    return 0.5 * (lo + hi)


def kth_eigenvalue(
    t: RootedTree, s: float, k: int, tol: float = DEFAULT_TOL, eps_zero: float | None = None
) -> float:
    """k-th smallest eigenvalue of M_T(s) (1-based) by bisection.

    Raises:
        ParameterError: If k is outside 1..n or tol is not positive
    """
    _check_tol(tol)
    if not 1 <= k <= t.n:
        raise ParameterError(f"k must be in 1..{t.n}, got {k}")
    lo, hi = _lower_bracket(t, s), _upper_bracket(t, s)
    steps = 0
    while hi - lo > tol and steps < MAX_BISECTION_STEPS:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        at_most_mid = t.n - count_relative(t, s, mid, eps_zero).greater
        if at_most_mid >= k:
            hi = mid
        else:
            lo = mid
        steps += 1
    logger.debug(f"kth eigenvalue bisection: n={t.n} k={k} s={s} steps={steps}")
    return 0.5 * (lo + hi)


def tree_average(n: int, s: float) -> float:
    """Average eigenvalue of M_T(s) for any tree on n vertices: 1 + ((n-2)/n)s^2."""
    if n < 1:
        raise ParameterError("tree needs at least one vertex")
    return 1.0 + (n - 2) / n * s * s


def average_interval_count(t: RootedTree, s: float, eps_zero: float | None = None) -> int:
    """Number of eigenvalues in [average, lambda_max] for the tree."""
    counts = count_relative(t, s, tree_average(t.n, s), eps_zero)
    return counts.greater + counts.equal


@dataclass(frozen=True)
class PathRecurrence:
    """Diagonal of M_{P_n}(s) - λI obtained by eliminating along the path.

    Attributes:
        n: Path order
        s: Deformation parameter
        lam: Shift λ
        z: Z_1..Z_n
        discriminant: (1 + s^2 - λ)^2 - 4s^2
        theta: Smaller fixed point of t -> 1 + s^2 - λ - s^2/t when the discriminant is positive
        theta_prime: Larger fixed point
    """

    n: int
    s: float
    lam: float
    z: tuple[float, ...]
    discriminant: float
    theta: float | None = None
    theta_prime: float | None = None

    def vieta_residuals(self) -> tuple[float, float] | None:
        """(θθ' - s^2, θ + θ' - (1 + s^2 - λ)), or None without fixed points."""
        if self.theta is None or self.theta_prime is None:
            return None
        s2 = self.s * self.s
        return (
            self.theta * self.theta_prime - s2,
            self.theta + self.theta_prime - (1.0 + s2 - self.lam),
        )

    def interior(self) -> tuple[float, ...]:
        """Z_1..Z_{n-1}, the values produced by the map itself."""
        return self.z[:-1]

    def _settled(self, value: float, settle_tol: float) -> bool:
        return self.theta is not None and abs(value - self.theta) <= settle_tol

    def below_theta(self, settle_tol: float = 0.0) -> bool:
        """All interior Z_j lie strictly below θ.

        Values within settle_tol of θ count as converged rather than above it.
        """
        if self.theta is None:
            return False
        theta = self.theta
        return all(value < theta or self._settled(value, settle_tol) for value in self.interior())

    def strictly_increasing(self, settle_tol: float = 0.0) -> bool:
        """Interior Z_j strictly increase with j.

        Once two consecutive values are within settle_tol of θ the sequence
        has converged in floating point and equal neighbours are accepted.
        """
        values = self.interior()
        return all(
            b > a or (self._settled(a, settle_tol) and self._settled(b, settle_tol))
            for a, b in zip(values, values[1:], strict=False)
        )

    def inertia(self) -> InertiaCounts:
        """Counts of eigenvalues of M_{P_n}(s) above, at and below λ from the signs of Z."""
        tolerance = max(1.0, abs(self.lam)) * ZERO_SCALE
        greater = sum(1 for value in self.z if value > tolerance)
        less = sum(1 for value in self.z if value < -tolerance)
        return InertiaCounts(greater=greater, equal=self.n - less - greater, less=less)


def path_recurrence(n: int, s: float, lam: float) -> PathRecurrence:
    """Run Z_1 = 1 - λ, Z_j = 1 + s^2 - λ - s^2/Z_{j-1}, Z_n = 1 - λ - s^2/Z_{n-1}.

    Args:
        n: Path order, at least 2
        s: Deformation parameter
        lam: Shift λ

    Returns:
        PathRecurrence with the sequence and fixed points

    Raises:
        ParameterError: If n < 2
        SingularPivotError: If some Z_j with j < n is zero (|Z_j| <= 1e-13)
    """
    if n < 2:
        raise ParameterError("path recurrence needs n >= 2")
    s2 = s * s
    c = 1.0 + s2 - lam
    z = [1.0 - lam]
    for j in range(2, n + 1):
        previous = z[-1]
        if abs(previous) <= PIVOT_TOL:
            raise SingularPivotError(j - 1, list(z))
        base = c if j < n else 1.0 - lam
        z.append(base - s2 / previous)

    discriminant = c * c - 4.0 * s2
    theta = theta_prime = None
    if discriminant > 0.0:
        root = math.sqrt(discriminant)
        theta = 0.5 * (c - root)
        theta_prime = 0.5 * (c + root)
    return PathRecurrence(
        n=n,
        s=s,
        lam=lam,
        z=tuple(z),
        discriminant=discriminant,
        theta=theta,
        theta_prime=theta_prime,
    )


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
