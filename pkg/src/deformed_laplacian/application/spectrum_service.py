#!/usr/bin/env python3
"""
Service for spectrum, bounds, tree and H-join reports.

Orchestrates the domain computations behind the spectrum, bounds, tree and
hjoin commands and packages the results for text or JSON output.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from deformed_laplacian.domain.closed_forms import (
    closed_form_c4_palindrome,
    closed_form_p3_symmetric,
    closed_form_p4_palindrome,
)
from deformed_laplacian.domain.deformed import (
    SClassification,
    average_eigenvalue,
    build_deformed,
    classify_s,
    lower_bound_radius,
    trace_identity,
    upper_bound_radius,
)
from deformed_laplacian.domain.errors import ParameterError, PreconditionError, StructureError
from deformed_laplacian.domain.graph import Graph, RootedTree, cycle, path, root_and_order
from deformed_laplacian.domain.hjoin import (
    HJoinSpec,
    HJoinValidation,
    assemble_graph,
    hjoin_spectrum,
    validate_spec,
)
from deformed_laplacian.domain.spectrum import Spectrum, max_multiset_deviation
from deformed_laplacian.domain.tree_inertia import (
    InertiaCounts,
    count_relative,
    kth_eigenvalue,
    tree_lambda_max,
)
from deformed_laplacian.domain.tree_properties import TreePropertyReport, check_tree_properties
from deformed_laplacian.domain.verification_report import SCHEMA_VERSION
from deformed_laplacian.infrastructure.config import SpectralConfig

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

# Oracle agreement required of hjoin --verify, relative to max(1, λ_max)
HJOIN_VERIFY_TOL = 1e-8

ClosedForm = Callable[..., Spectrum]


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "spectrum_service",
        "description": "Service for spectrum, bounds, tree and H-join reports",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass(frozen=True)
class SpectrumReport:
    """Spectrum of M_G(s) with its summary quantities.

    Attributes:
        n: Number of vertices
        m: Number of edges
        s: Deformation parameter
        spectrum: Eigenvalues of M_G(s)
        trace: Sum of the computed eigenvalues
        trace_identity: Closed-form trace n(1 - s^2) + 2ms^2
        average: Average eigenvalue
        lambda_max: Largest eigenvalue
        lower_bound: Lower bound on lambda_max, None where not asserted
        upper_bound: Upper bound on lambda_max
        classification: Sub/super-Laplacian classification of s
    """

    n: int
    m: int
    s: float
    spectrum: Spectrum
    trace: float
    trace_identity: float
    average: float | None
    lambda_max: float | None
    lower_bound: float | None
    upper_bound: float
    classification: SClassification

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization.

        Returns:
            Dictionary representation
        """
        return {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "m": self.m,
            "s": self.s,
            "eigenvalues": list(self.spectrum.values),
            "trace": self.trace,
            "trace_identity": self.trace_identity,
            "average": self.average,
            "lambda_max": self.lambda_max,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "classification": self.classification.to_dict(),
        }

    def format_spectrum(self, fmt: Callable[[float], str]) -> str:
        """One eigenvalue per line, ascending."""
        return "\n".join(fmt(value) for value in self.spectrum)

    def format_bounds(self, fmt: Callable[[float], str]) -> str:
        """Bounds summary for console display."""

        def show(value: float | None) -> str:
            return "n/a" if value is None else fmt(value)

        return "\n".join(
            [
                f"n={self.n} m={self.m} s={fmt(self.s)} ({self.classification.label})",
                f"lower bound:  {show(self.lower_bound)}",
                f"lambda_max:   {show(self.lambda_max)}",
                f"upper bound:  {fmt(self.upper_bound)}",
                f"average:      {show(self.average)}",
                f"trace:        {fmt(self.trace)} (identity {fmt(self.trace_identity)})",
            ]
        )


@dataclass(frozen=True)
class HJoinReport:
    """Spectrum of an H-join with optional cross-checks.

    Attributes:
        s: Deformation parameter
        validation: n_i, d_i, N_i of the components
        spectrum: Spectrum from the block and quotient decomposition
        oracle_deviation: Max multiset gap to the dense oracle, if verified
        closed_form: Name of the matching closed form, if any
        closed_form_deviation: Max multiset gap to that closed form
    """

    s: float
    validation: HJoinValidation
    spectrum: Spectrum
    oracle_deviation: float | None = None
    closed_form: str | None = None
    closed_form_deviation: float | None = None

    @property
    def verified(self) -> bool:
        """True unless an oracle check ran and exceeded the tolerance."""
        if self.oracle_deviation is None:
            return True
        scale = max(1.0, abs(self.spectrum.largest)) if len(self.spectrum) else 1.0
        return self.oracle_deviation <= HJOIN_VERIFY_TOL * scale

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "schema": SCHEMA_VERSION,
            "s": self.s,
            "structure": self.validation.to_dict(),
            "eigenvalues": list(self.spectrum.values),
            "oracle_deviation": self.oracle_deviation,
            "closed_form": self.closed_form,
            "closed_form_deviation": self.closed_form_deviation,
            "verified": self.verified,
        }

    def format_text(self, fmt: Callable[[float], str]) -> str:
        """Eigenvalues one per line followed by the cross-check lines."""
        lines = [fmt(value) for value in self.spectrum]
        if self.closed_form is not None and self.closed_form_deviation is not None:
            lines.append(
                f"closed form {self.closed_form}: deviation {self.closed_form_deviation:.3e}"
            )
        if self.oracle_deviation is not None:
            lines.append(f"oracle deviation: {self.oracle_deviation:.3e}")
        return "\n".join(lines)


def matching_closed_form(spec: HJoinSpec) -> tuple[str, ClosedForm] | None:
    """Closed form whose template matches spec.h, if any."""
    if spec.h == path(3):
        return "p3-symmetric", closed_form_p3_symmetric
    if spec.h == path(4):
        return "p4-palindrome", closed_form_p4_palindrome
    if spec.h == cycle(4):
        return "c4-palindrome", closed_form_c4_palindrome
    return None


class SpectrumService:
    """Application service for spectral reports."""

    def __init__(self, config: SpectralConfig | None = None) -> None:
        """Initialize the spectrum service.

        Args:
            config: Numerical settings (defaults used when omitted)
        """
        self.config = config if config is not None else SpectralConfig()

    def spectrum_report(self, g: Graph, s: float) -> SpectrumReport:
        """Compute the spectrum of M_G(s) together with traces and bounds.

        Args:
            g: Input graph
            s: Deformation parameter

        Returns:
            SpectrumReport
        """
        spectrum = build_deformed(g, s).spectrum(self.config.solver, self.config.group_tol)
        lower = None
        if g.n >= 2 and g.is_connected():
            lower = lower_bound_radius(g, s)
        report = SpectrumReport(
            n=g.n,
            m=g.m,
            s=s,
            spectrum=spectrum,
            trace=spectrum.total(),
            trace_identity=trace_identity(g, s),
            average=average_eigenvalue(g, s) if g.n else None,
            lambda_max=spectrum.largest if len(spectrum) else None,
            lower_bound=lower,
            upper_bound=upper_bound_radius(g, s, self.config.solver),
            classification=classify_s(s),
        )
        logger.debug(f"Spectrum report: n={g.n} m={g.m} s={s} lambda_max={report.lambda_max}")
        return report

    def _rooted(self, g: Graph, root: int | None) -> RootedTree:
        if not g.is_tree():
            raise StructureError(f"input is not a tree (n={g.n}, m={g.m})")
        return root_and_order(g, 0 if root is None else root)

    def tree_locate(self, g: Graph, s: float, lam: float, root: int | None = None) -> InertiaCounts:
        """Count eigenvalues of M_T(s) above, at and below lam.

        Raises:
            StructureError: If g is not a tree
        """
        return count_relative(self._rooted(g, root), s, lam, self.config.eps_zero)

    def tree_radius(self, g: Graph, s: float, root: int | None = None) -> float:
        """Largest eigenvalue of M_T(s) by bisection."""
        return tree_lambda_max(self._rooted(g, root), s, self.config.tol, self.config.eps_zero)

    def tree_kth(self, g: Graph, s: float, k: int, root: int | None = None) -> float:
        """k-th smallest eigenvalue of M_T(s) by bisection."""
        return kth_eigenvalue(self._rooted(g, root), s, k, self.config.tol, self.config.eps_zero)

    def tree_props(self, g: Graph, s: float, root: int | None = None) -> TreePropertyReport:
        """Run the tree property checklist.

        Raises:
            StructureError: If g is not a tree
            ParameterError: If the tree has fewer than two vertices
        """
        if g.n < 2:
            raise ParameterError("property checklist needs at least two vertices")
        return check_tree_properties(self._rooted(g, root), s, self.config.solver)

    def hjoin_report(self, spec: HJoinSpec, s: float, verify: bool = False) -> HJoinReport:
        """Synthesize the H-join spectrum and cross-check it.

        A closed form is compared whenever the template and components meet
        its hypotheses. With verify the graph is assembled and the dense
        oracle spectrum is compared as a multiset.

        Args:
            spec: H-join specification
            s: Deformation parameter
            verify: Whether to run the dense oracle on the assembled graph

        Returns:
            HJoinReport
        """
        solver, group_tol = self.config.solver, self.config.group_tol
        validation = validate_spec(spec)
        spectrum = hjoin_spectrum(spec, s, solver, group_tol)

        closed_name = closed_deviation = None
        candidate = matching_closed_form(spec)
        if candidate is not None:
            name, closed_form = candidate
            try:
                closed = closed_form(spec, s, solver, group_tol)
            except PreconditionError as e:
                logger.debug(f"Closed form {name} not applicable: {e}")
            else:
                closed_name = name
                closed_deviation = max_multiset_deviation(spectrum, closed)

        oracle_deviation = None
        if verify:
            oracle = build_deformed(assemble_graph(spec), s).spectrum(solver, group_tol)
            oracle_deviation = max_multiset_deviation(spectrum, oracle)
            logger.info(f"H-join oracle deviation at s={s}: {oracle_deviation:.3e}")

        return HJoinReport(
            s=s,
            validation=validation,
            spectrum=spectrum,
            oracle_deviation=oracle_deviation,
            closed_form=closed_name,
            closed_form_deviation=closed_deviation,
        )


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
