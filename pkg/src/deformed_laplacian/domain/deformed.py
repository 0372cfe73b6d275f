#!/usr/bin/env python3
"""
Deformed Laplacian M_G(s) = I - sA + s^2(D - I) and its basic spectral facts.

Covers matrix construction, the trace/average identity, the two spectral
radius bounds, classification of the deformation parameter, the rank-two
single-edge perturbation, sign conjugation for bipartite graphs and the
edge-deletion monotonicity checks.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from deformed_laplacian.domain.dense_eigen import (
    JACOBI,
    SymMatrix,
    adjacency_spectral_radius,
    largest_eigenvalue,
    symmetric_spectrum,
)
from deformed_laplacian.domain.errors import EdgeNotFoundError, ParameterError, StructureError
from deformed_laplacian.domain.graph import Edge, Graph
from deformed_laplacian.domain.spectrum import DEFAULT_GROUP_TOL, Spectrum

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

# Absolute slack when comparing two oracle eigenvalues for an inequality.
COMPARISON_SLACK = 1e-9


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "deformed",
        "description": "Deformed Laplacian construction, bounds and perturbation",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def check_s(s: float) -> float:
    """Return s as float, rejecting NaN and infinities.

    Raises:
        ParameterError: If s is not finite
    """
    value = float(s)
    if not math.isfinite(value):
        raise ParameterError(f"s must be finite, got {s}")
    return value


def in_monotone_regime(s: float) -> bool:
    """True when s lies in (-inf, 0] or [1, inf), where edge deletion cannot raise the radius."""
    return s <= 0.0 or s >= 1.0


@dataclass(frozen=True, eq=False)
class DeformedMatrix:
    """M_G(s) together with the graph and parameter it came from.

    Attributes:
        graph: Source graph
        s: Deformation parameter
        matrix: The n x n symmetric matrix
    """

    graph: Graph
    s: float
    matrix: SymMatrix

    def spectrum(self, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
        """Oracle spectrum of the matrix."""
        return symmetric_spectrum(self.matrix, solver=solver, group_tol=group_tol)

    def lambda_max(self, solver: str = JACOBI) -> float:
        """Largest eigenvalue."""
        return largest_eigenvalue(self.matrix, solver=solver)


def build_deformed(g: Graph, s: float) -> DeformedMatrix:
    """Build M_G(s).

    Diagonal entries are 1 + s^2(deg(i) - 1) and edge entries are -s, so
    s = 1 gives D - A, s = -1 gives D + A and s = 0 gives I exactly.

    Args:
        g: Graph
        s: Finite deformation parameter

    Returns:
        DeformedMatrix instance
    """
    s = check_s(s)
    entries = -s * g.adjacency_matrix()
    degrees = np.asarray(g.degrees(), dtype=float)
    np.fill_diagonal(entries, 1.0 + s * s * (degrees - 1.0))
    return DeformedMatrix(graph=g, s=s, matrix=SymMatrix.from_array(entries))


def deformed_spectrum(
    g: Graph, s: float, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Oracle spectrum of M_G(s)."""
    return build_deformed(g, s).spectrum(solver=solver, group_tol=group_tol)


def trace_identity(g: Graph, s: float) -> float:
    """Closed-form trace n(1 - s^2) + 2ms^2."""
    s = check_s(s)
    return g.n * (1.0 - s * s) + 2.0 * g.m * s * s


def average_eigenvalue(g: Graph, s: float) -> float:
    """Average eigenvalue 1 - s^2 + d̄ s^2 with d̄ = 2m/n.

    For trees this is 1 + ((n - 2)/n)s^2.

    Raises:
        ParameterError: If g has no vertices
    """
    s = check_s(s)
    return 1.0 - s * s + g.average_degree() * s * s


def lower_bound_radius(g: Graph, s: float) -> float | None:
    """Lower bound on the spectral radius, attained exactly by stars.

    Returns ½(s^2(Δ-1) + 2 + |s|·sqrt(s^2(Δ-1)^2 + 4Δ)) for s in (-inf, 0] or
    [1, inf) and None for s in (0, 1), where no bound is asserted.

    Args:
        g: Connected graph with at least two vertices
        s: Deformation parameter

    Returns:
        The bound, or None outside its range of validity

    Raises:
        StructureError: If g is disconnected
        ParameterError: If g has fewer than two vertices
    """
    s = check_s(s)
    if g.n < 2:
        raise ParameterError("lower bound needs at least two vertices")
    if not g.is_connected():
        raise StructureError("lower bound requires a connected graph")
    if not in_monotone_regime(s):
        return None
    delta = g.max_degree()
    s2 = s * s
    return 0.5 * (s2 * (delta - 1) + 2.0 + abs(s) * math.sqrt(s2 * (delta - 1) ** 2 + 4.0 * delta))


def upper_bound_radius(g: Graph, s: float, solver: str = JACOBI) -> float:
    """Upper bound 1 + s^2(Δ-1) + |s|·ρ(A(G)), valid for every real s."""
    s = check_s(s)
    return 1.0 + s * s * (g.max_degree() - 1) + abs(s) * adjacency_spectral_radius(g, solver)


def star_spectrum(leaves: int, s: float, group_tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Closed-form spectrum of M(s) for the star K_{1,leaves}.

    The two simple eigenvalues are ½(s^2(n-1) + 2 ± |s|·sqrt(s^2(n-1)^2 + 4n))
    with n = leaves; the value 1 has multiplicity n - 1.
    """
    if leaves < 1:
        raise ParameterError("star needs at least one leaf")
    s = check_s(s)
    s2 = s * s
    centre = s2 * (leaves - 1) + 2.0
    root = abs(s) * math.sqrt(s2 * (leaves - 1) ** 2 + 4.0 * leaves)
    values = [0.5 * (centre - root), 0.5 * (centre + root)] + [1.0] * (leaves - 1)
    return Spectrum.from_values(values, group_tol=group_tol)


@dataclass(frozen=True)
class SClassification:
    """Classification of a deformation parameter.

    Attributes:
        s: Parameter value
        sub_laplacian: |s| < 1
        super_laplacian: |s| > 1
        boundary: |s| == 1 (Laplacian or signless Laplacian)
        lam: Reference eigenvalue if one was supplied
        adapted: lam > (1 + |s|)^2, or None when no lam was supplied
    """

    s: float
    sub_laplacian: bool
    super_laplacian: bool
    boundary: bool
    lam: float | None = None
    adapted: bool | None = None

    @property
    def label(self) -> str:
        """Short description used in reports."""
        if self.boundary:
            return "laplacian" if self.s > 0 else "signless-laplacian"
        return "sub-laplacian" if self.sub_laplacian else "super-laplacian"

    def adapted_interval(self) -> tuple[float, float] | None:
        """Open interval (1 - sqrt(lam), sqrt(lam) - 1) of adapted s values."""
        if self.lam is None:
            return None
        root = math.sqrt(self.lam)
        return 1.0 - root, root - 1.0

    def to_dict(self) -> dict[str, object]:
        """Convert to dictionary for serialization."""
        return {
            "s": self.s,
            "class": self.label,
            "sub_laplacian": self.sub_laplacian,
            "super_laplacian": self.super_laplacian,
            "boundary": self.boundary,
            "lambda": self.lam,
            "adapted": self.adapted,
        }


def classify_s(s: float, lam: float | None = None) -> SClassification:
    """Classify s as sub-Laplacian, super-Laplacian or boundary, and test adaptation.

    Args:
        s: Deformation parameter
        lam: Optional reference value, must exceed 1

    Returns:
        SClassification

    Raises:
        ParameterError: If lam is supplied and lam <= 1
    """
    s = check_s(s)
    magnitude = abs(s)
    adapted = None
    if lam is not None:
        if not lam > 1.0:
            raise ParameterError(f"lambda must be greater than 1, got {lam}")
        adapted = lam > (1.0 + magnitude) ** 2
    return SClassification(
        s=s,
        sub_laplacian=magnitude < 1.0,
        super_laplacian=magnitude > 1.0,
        boundary=magnitude == 1.0,
        lam=lam,
        adapted=adapted,
    )


@dataclass(frozen=True)
class EdgePerturbation:
    """Nonzero eigenvalues of H(s) = M_G(s) - M_{G-e}(s).

    Attributes:
        s: Deformation parameter
        eigenvalue_low: s^2 - s (eigenvector e_u + e_v)
        eigenvalue_high: s^2 + s (eigenvector e_u - e_v)
    """

    s: float
    eigenvalue_low: float
    eigenvalue_high: float

    @property
    def mean(self) -> float:
        """Half sum, always s^2."""
        return 0.5 * (self.eigenvalue_low + self.eigenvalue_high)

    @property
    def half_difference(self) -> float:
        """Half difference, always -s."""
        return 0.5 * (self.eigenvalue_low - self.eigenvalue_high)

    @property
    def positive_semidefinite(self) -> bool:
        """True when both nonzero eigenvalues are non-negative."""
        return self.eigenvalue_low >= 0.0 and self.eigenvalue_high >= 0.0


def edge_perturbation(s: float) -> EdgePerturbation:
    """Eigenvalues of the rank-two matrix left by deleting one edge."""
    s = check_s(s)
    return EdgePerturbation(s=s, eigenvalue_low=s * s - s, eigenvalue_high=s * s + s)


def perturbation_matrix(g: Graph, edge: Edge, s: float) -> SymMatrix:
    """H(s) = M_G(s) - M_{G-e}(s) as a dense matrix.

    Raises:
        EdgeNotFoundError: If edge is not in g
    """
    reduced = g.remove_edge(*edge)
    return build_deformed(g, s).matrix - build_deformed(reduced, s).matrix


def bipartite_conjugation(g: Graph, s: float) -> SymMatrix | None:
    """Sign matrix U with U·M_G(s)·U = M_G(-s), or None if g is not bipartite.

    U is +1 on the first part of the bipartition and -1 on the second.
    """
    check_s(s)
    parts = g.bipartition()
    if parts is None:
        return None
    signs = np.ones(g.n)
    signs[sorted(parts[1])] = -1.0
    return SymMatrix.from_array(np.diag(signs))


@dataclass(frozen=True)
class MonotonicityReport:
    """Spectral radius before and after deleting one edge.

    Attributes:
        edge: Deleted edge
        s: Deformation parameter
        graph_radius: λ_max(M_G(s))
        subgraph_radius: λ_max(M_{G-e}(s))
        asserted: Whether s lies where the inequality is guaranteed
    """

    edge: Edge
    s: float
    graph_radius: float
    subgraph_radius: float
    asserted: bool

    @property
    def holds(self) -> bool:
        """graph_radius >= subgraph_radius up to comparison slack."""
        return self.graph_radius >= self.subgraph_radius - COMPARISON_SLACK

    @property
    def status(self) -> str:
        """'pass', 'fail' (asserted and violated) or 'finding' (unasserted violation)."""
        if self.holds:
            return "pass"
        return "fail" if self.asserted else "finding"

    def to_dict(self) -> dict[str, object]:
        """Convert to dictionary for serialization."""
        return {
            "edge": list(self.edge),
            "s": self.s,
            "graph_radius": self.graph_radius,
            "subgraph_radius": self.subgraph_radius,
            "asserted": self.asserted,
            "status": self.status,
        }


def verify_edge_monotonicity(
    g: Graph, edge: Edge, s: float, solver: str = JACOBI
) -> MonotonicityReport:
    """Compare spectral radii of g and g minus one edge.

    The inequality is asserted only for s in (-inf, 0] or [1, inf); inside
    (0, 1) both values are reported and a violation is a finding, not a failure.

    Raises:
        EdgeNotFoundError: If edge is not in g
    """
    s = check_s(s)
    u, v = edge
    if not g.has_edge(u, v):
        raise EdgeNotFoundError(u, v)
    reduced = g.remove_edge(u, v)
    report = MonotonicityReport(
        edge=(min(u, v), max(u, v)),
        s=s,
        graph_radius=build_deformed(g, s).lambda_max(solver),
        subgraph_radius=build_deformed(reduced, s).lambda_max(solver),
        asserted=in_monotone_regime(s),
    )
    logger.debug(
        f"Edge monotonicity: edge={report.edge} s={s} "
        f"rho_G={report.graph_radius:.10g} rho_G'={report.subgraph_radius:.10g} "
        f"status={report.status}"
    )
    return report


@dataclass(frozen=True)
class SubgraphMonotonicityReport:
    """Spectral radii along a chain of single-edge deletions.

    Attributes:
        s: Deformation parameter
        edges: Edges removed, in order
        radii: λ_max before any deletion followed by one value per deletion
        asserted: Whether s lies where the chain must be non-increasing
    """

    s: float
    edges: tuple[Edge, ...]
    radii: tuple[float, ...] = field(default_factory=tuple)
    asserted: bool = True

    @property
    def holds(self) -> bool:
        """Radii never increase by more than the comparison slack."""
        steps = zip(self.radii, self.radii[1:], strict=False)
        return all(b <= a + COMPARISON_SLACK for a, b in steps)

    @property
    def status(self) -> str:
        """'pass', 'fail' or 'finding' as for single-edge reports."""
        if self.holds:
            return "pass"
        return "fail" if self.asserted else "finding"


def verify_subgraph_monotonicity(
    g: Graph, edges: Sequence[Edge], s: float, solver: str = JACOBI
) -> SubgraphMonotonicityReport:
    """Delete edges one at a time and record the spectral radius after each step.

    Raises:
        EdgeNotFoundError: If an edge is missing at the time it is deleted
    """
    s = check_s(s)
    current = g
    radii = [build_deformed(current, s).lambda_max(solver)]
    for u, v in edges:
        current = current.remove_edge(u, v)
        radii.append(build_deformed(current, s).lambda_max(solver))
    return SubgraphMonotonicityReport(
        s=s,
        edges=tuple((min(u, v), max(u, v)) for u, v in edges),
        radii=tuple(radii),
        asserted=in_monotone_regime(s),
    )


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
