#!/usr/bin/env python3
"""
Service for the randomized property suites.

Every suite draws its instances from its own generator seeded with
``[seed, suite index]``, so a run is reproducible from the seed alone and
adding trials to one suite never shifts the instances of another.
"""

import logging
from collections.abc import Callable
from datetime import datetime, timezone

import numpy as np

from deformed_laplacian.application.random_graphs import (
    random_bipartite,
    random_connected,
    random_hjoin_spec,
    random_tree,
)
from deformed_laplacian.application.spectrum_service import matching_closed_form
from deformed_laplacian.domain.deformed import (
    average_eigenvalue,
    bipartite_conjugation,
    build_deformed,
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
from deformed_laplacian.domain.dense_eigen import symmetric_spectrum
from deformed_laplacian.domain.graph import Graph, cycle, path, root_and_order, star
from deformed_laplacian.domain.hjoin import (
    ComponentSpec,
    HJoinSpec,
    assemble_graph,
    block_matrix,
    component_lambda1,
    hjoin_spectrum,
    periodic_jacobi_check,
    quotient_matrix,
    tridiagonal_charpoly,
    tridiagonal_parts,
)
from deformed_laplacian.domain.spectrum import Spectrum, max_multiset_deviation
from deformed_laplacian.domain.tree_inertia import (
    average_interval_count,
    count_around,
    count_relative,
    kth_eigenvalue,
    path_recurrence,
    tree_lambda_max,
)
from deformed_laplacian.domain.tree_properties import FAIL, FLAGGED, check_tree_properties
from deformed_laplacian.domain.verification_report import SuiteResult, VerificationReport
from deformed_laplacian.infrastructure.config import SpectralConfig
from deformed_laplacian.infrastructure.logger import log_operation

UTC = timezone.utc

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

# Parameter grids
INERTIA_S = (-2.0, -1.0, -0.6, 0.0, 0.3, 1.0, 1.7)
STAR_S = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)
HJOIN_S = (-1.5, -1.0, -0.5, 0.3, 1.0, 2.0)
RANDOM_HJOIN_S = (-2.0, -1.0, -0.5, 0.3, 1.0, 1.6)
BIPARTITE_S = (0.3, 0.8, 1.0, 1.4)
PROPERTY_S = (-1.5, -1.0, -0.5, 0.5, 1.0, 1.5)
BOUNDS_S = (-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0)
MONOTONE_S = (-1.5, -1.0, -0.5, 0.0, 0.3, 0.5, 0.75, 1.0, 1.5)
FILE_S = (-1.5, -1.0, -0.5, 0.0, 0.3, 0.5, 0.75, 1.0, 1.5, 2.0)
PATH_ORDERS = (5, 20, 100)
PATH_S = (0.25, -0.25)
PATH_SHIFT = 0.1

# Tolerances
TRACE_TOL = 1e-8
STAR_TOL = 1e-9
HJOIN_TOL = 1e-8
CLOSED_FORM_TOL = 1e-9
COSPECTRAL_TOL = 1e-9
BOUND_SLACK = 1e-9
VIETA_TOL = 1e-12
SETTLE_TOL = 1e-12
CHARPOLY_TOL = 1e-7
ROW_SUM_TOL = 1e-12
# Half-width around an oracle eigenvalue, relative to max(1, |lambda|)
AT_EIGENVALUE_SHIFT = 1e-6

MAX_TREE_ORDER = 12
MAX_GRAPH_ORDER = 14
MAX_RANDOM_HJOINS = 50
MAX_BIPARTITE = 100
MAX_PROPERTY_TREES = 100
MAX_BOUND_GRAPHS = 100

# Spectrum of the (C4, P2, C6) join over P3 at s = 1
P3_JOIN_SPECTRUM_AT_ONE = (0.0, 2.0, 3.0, 3.0, 4.0, 4.0, 5.0, 5.0, 6.0, 6.0, 12.0, 12.0)

SUITE_NAMES = (
    "trace_identity",
    "star_closed_form",
    "inertia_oracle",
    "bisection",
    "path_recurrence",
    "tree_properties",
    "hjoin_oracle",
    "hjoin_closed_forms",
    "quotient_structure",
    "bipartite_cospectral",
    "bounds",
    "edge_monotonicity",
)


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "verify_service",
        "description": "Randomized property suites",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def reference_hjoins() -> dict[str, HJoinSpec]:
    """The three worked H-join examples: P3, P4 and C4 templates."""
    p2_c3_c3_p2 = (
        ComponentSpec("path", 2),
        ComponentSpec("cycle", 3),
        ComponentSpec("cycle", 3),
        ComponentSpec("path", 2),
    )
    return {
        "p3-c4-p2-c6": HJoinSpec(
            h=path(3),
            components=(
                ComponentSpec("cycle", 4),
                ComponentSpec("path", 2),
                ComponentSpec("cycle", 6),
            ),
        ),
        "p4-p2-c3-c3-p2": HJoinSpec(h=path(4), components=p2_c3_c3_p2),
        "c4-p2-c3-c3-p2": HJoinSpec(h=cycle(4), components=p2_c3_c3_p2),
    }


def _describe(g: Graph) -> str:
    return f"n={g.n} edges={[list(edge) for edge in g.sorted_edges]}"


def _describe_spec(spec: HJoinSpec) -> str:
    return str(spec.to_dict())


class VerifyService:
    """Application service running the property suites."""

    def __init__(self, config: SpectralConfig | None = None) -> None:
        """Initialize the verify service.

        Args:
            config: Numerical settings (defaults used when omitted)
        """
        self.config = config if config is not None else SpectralConfig()

    def _spectrum(self, g: Graph, s: float) -> Spectrum:
        return build_deformed(g, s).spectrum(self.config.solver, self.config.group_tol)

    def _check_trace(
        self, trace: SuiteResult, g: Graph, s: float, spectrum: Spectrum, instance: str
    ) -> None:
        deviation = abs(spectrum.total() - trace_identity(g, s))
        trace.record(
            deviation <= TRACE_TOL * max(1, g.n),
            deviation,
            instance,
            f"trace {spectrum.total():.12g} != n(1-s^2)+2ms^2 = {trace_identity(g, s):.12g}",
        )

    def verify_random(
        self,
        trials: int,
        seed: int,
        progress_callback: Callable[[str], None] | None = None,
    ) -> VerificationReport:
        """Run every suite on seeded random instances.

        Args:
            trials: Instances per randomized suite (capped per suite)
            seed: Random seed
            progress_callback: Optional callback receiving the suite name

        Returns:
            VerificationReport
        """
        if trials < 1:
            raise ValueError("trials must be at least 1")
        start = datetime.now(UTC)

        def rng_for(name: str) -> np.random.Generator:
            return np.random.default_rng([seed, SUITE_NAMES.index(name)])

        trace = SuiteResult("trace_identity")
        suites = [trace]
        runs: list[tuple[str, Callable[[], SuiteResult]]] = [
            ("star_closed_form", lambda: self.run_star_closed_form(trace)),
            (
                "inertia_oracle",
                lambda: self.run_inertia(rng_for("inertia_oracle"), trials, trace),
            ),
            ("bisection", lambda: self.run_bisection(rng_for("bisection"), trials)),
            ("path_recurrence", self.run_path_recurrence),
            (
                "tree_properties",
                lambda: self.run_tree_properties(
                    rng_for("tree_properties"), min(trials, MAX_PROPERTY_TREES)
                ),
            ),
            (
                "hjoin_oracle",
                lambda: self.run_hjoin_oracle(
                    rng_for("hjoin_oracle"), min(trials, MAX_RANDOM_HJOINS), trace
                ),
            ),
            ("hjoin_closed_forms", self.run_hjoin_closed_forms),
            ("quotient_structure", self.run_quotient_structure),
            (
                "bipartite_cospectral",
                lambda: self.run_bipartite(
                    rng_for("bipartite_cospectral"), min(trials, MAX_BIPARTITE), trace
                ),
            ),
            (
                "bounds",
                lambda: self.run_bounds(rng_for("bounds"), min(trials, MAX_BOUND_GRAPHS)),
            ),
            (
                "edge_monotonicity",
                lambda: self.run_edge_monotonicity(
                    rng_for("edge_monotonicity"), min(trials, MAX_BOUND_GRAPHS)
                ),
            ),
        ]
        for name, run in runs:
            if progress_callback:
                progress_callback(name)
            result = run()
            suites.append(result)
            log_operation(
                logger,
                f"Suite {name} finished",
                {"trials": result.trials, "failed": result.failed, "findings": result.findings},
            )

        return VerificationReport(
            source="random", seed=seed, start_time=start, end_time=datetime.now(UTC), suites=suites
        )

    def verify_graph(self, g: Graph, label: str) -> VerificationReport:
        """Run every suite that applies to one graph.

        Bounds need a connected graph with two or more vertices, cospectrality
        needs a bipartite graph and the inertia, bisection and checklist suites
        need a tree. Monotonicity violations for s in (0, 1) are findings.

        Args:
            g: Graph to check
            label: Name shown in the report

        Returns:
            VerificationReport with seed None
        """
        start = datetime.now(UTC)
        instance = _describe(g)
        trace = SuiteResult("trace_identity")
        suites = [trace]
        spectra = {s: self._spectrum(g, s) for s in FILE_S} if g.n else {}
        for s, spectrum in spectra.items():
            self._check_trace(trace, g, s, spectrum, f"{instance} s={s}")

        if g.n >= 2 and g.is_connected():
            bounds = SuiteResult("bounds")
            for s, spectrum in spectra.items():
                self._check_bounds(bounds, g, s, spectrum, instance)
            suites.append(bounds)

        if g.m:
            monotone = SuiteResult("edge_monotonicity")
            for edge in g.sorted_edges:
                for s in FILE_S:
                    self._check_edge(monotone, g, edge, s, instance)
            suites.append(monotone)

        if g.n and g.bipartition() is not None:
            cospectral = SuiteResult("bipartite_cospectral")
            for s in BIPARTITE_S:
                self._check_bipartite(cospectral, g, s, instance)
            suites.append(cospectral)

        if g.is_tree():
            inertia = SuiteResult("inertia_oracle")
            bisection = SuiteResult("bisection")
            for s, spectrum in spectra.items():
                self._check_inertia(inertia, g, s, spectrum, instance)
                self._check_bisection(bisection, g, s, spectrum, instance)
            suites.extend([inertia, bisection])
            if g.n >= 2:
                properties = SuiteResult("tree_properties")
                for s in FILE_S:
                    self._check_properties(properties, g, s, instance)
                suites.append(properties)

        logger.info(f"Verified {label}: {len(suites)} suites")
        return VerificationReport(
            source=label, seed=None, start_time=start, end_time=datetime.now(UTC), suites=suites
        )

    def run_star_closed_form(self, trace: SuiteResult) -> SuiteResult:
        """Oracle spectrum of every star K_{1,n}, 2 <= n <= 10, against its closed form."""
        suite = SuiteResult("star_closed_form")
        for leaves in range(2, 11):
            g = star(leaves)
            for s in STAR_S:
                oracle = self._spectrum(g, s)
                instance = f"star leaves={leaves} s={s}"
                self._check_trace(trace, g, s, oracle, instance)
                deviation = max_multiset_deviation(oracle, star_spectrum(leaves, s))
                suite.record(deviation <= STAR_TOL, deviation, instance, "closed form mismatch")
        return suite

    def _check_inertia(
        self, suite: SuiteResult, g: Graph, s: float, oracle: Spectrum, instance: str, root: int = 0
    ) -> None:
        t = root_and_order(g, root)
        groups = oracle.grouped()
        at_eigenvalues = [value for value, _ in groups]
        between = [0.5 * (a + b) for a, b in zip(at_eigenvalues, at_eigenvalues[1:], strict=False)]
        off_spectrum = [at_eigenvalues[0] - 0.5, *between, at_eigenvalues[-1] + 0.5]
        gaps = [b - a for a, b in zip(at_eigenvalues, at_eigenvalues[1:], strict=False)]
        quarter_gap = 0.25 * min(gaps) if gaps else float("inf")

        checks = [(lam, count_relative(t, s, lam, self.config.eps_zero)) for lam in off_spectrum]
        for lam in at_eigenvalues:
            delta = min(AT_EIGENVALUE_SHIFT * max(1.0, abs(lam)), quarter_gap)
            checks.append((lam, count_around(t, s, lam, delta, self.config.eps_zero)))

        for lam, counts in checks:
            expected = (oracle.count_greater(lam), oracle.count_equal(lam), oracle.count_less(lam))
            suite.record(
                tuple(counts) == expected and sum(counts) == g.n,
                instance=f"{instance} root={root} s={s} lambda={lam!r}",
                message=f"counts {tuple(counts)} != oracle {expected}",
            )

        # every root must give the same counts off the spectrum
        midpoint = off_spectrum[len(off_spectrum) // 2]
        reference = tuple(count_relative(t, s, midpoint, self.config.eps_zero))
        others = {
            tuple(count_relative(root_and_order(g, r), s, midpoint, self.config.eps_zero))
            for r in range(g.n)
        }
        suite.record(
            others == {reference},
            instance=f"{instance} s={s} lambda={midpoint!r}",
            message=f"counts depend on the root: {sorted(others)}",
        )

        if abs(s) == 1.0:
            census = average_interval_count(t, s, self.config.eps_zero)
            if census > g.n // 2:
                suite.note(
                    f"{instance} s={s}",
                    f"{census} eigenvalues in [average, lambda_max] exceeds floor(n/2)",
                )

    def run_inertia(self, rng: np.random.Generator, trials: int, trace: SuiteResult) -> SuiteResult:
        """Inertia counts against the dense oracle on random trees with random roots."""
        suite = SuiteResult("inertia_oracle")
        for _ in range(trials):
            g = random_tree(rng, int(rng.integers(2, MAX_TREE_ORDER + 1)))
            s = float(rng.choice(INERTIA_S))
            root = int(rng.integers(0, g.n))
            oracle = self._spectrum(g, s)
            self._check_trace(trace, g, s, oracle, f"tree {_describe(g)} s={s}")
            self._check_inertia(suite, g, s, oracle, f"tree {_describe(g)}", root)
        return suite

    def _check_bisection(
        self, suite: SuiteResult, g: Graph, s: float, oracle: Spectrum, instance: str
    ) -> None:
        t = root_and_order(g, 0)
        tol = self.config.tol
        allowed = 2.0 * tol + 1e-12 * max(1.0, abs(oracle.largest))
        radius = tree_lambda_max(t, s, tol, self.config.eps_zero)
        deviation = abs(radius - oracle.largest)
        suite.record(
            deviation <= allowed, deviation, f"{instance} s={s}", f"lambda_max {radius!r}"
        )
        kth = Spectrum.from_values(
            [kth_eigenvalue(t, s, k, tol, self.config.eps_zero) for k in range(1, g.n + 1)]
        )
        deviation = max_multiset_deviation(kth, oracle)
        suite.record(deviation <= allowed, deviation, f"{instance} s={s}", "k-th eigenvalues")

    def run_bisection(self, rng: np.random.Generator, trials: int) -> SuiteResult:
        """Bisection for lambda_max and every k-th eigenvalue against the oracle."""
        suite = SuiteResult("bisection")
        for _ in range(trials):
            g = random_tree(rng, int(rng.integers(1, MAX_TREE_ORDER + 1)))
            s = float(rng.choice(INERTIA_S))
            self._check_bisection(suite, g, s, self._spectrum(g, s), f"tree {_describe(g)}")
        return suite

    def run_path_recurrence(self) -> SuiteResult:
        """Path elimination sequence just above lambda_max of M_{P_n}(s)."""
        suite = SuiteResult("path_recurrence")
        for n in PATH_ORDERS:
            g = path(n)
            for s in PATH_S:
                lam = self._spectrum(g, s).largest + PATH_SHIFT
                instance = f"path n={n} s={s} lambda={lam!r}"
                rec = path_recurrence(n, s, lam)
                residuals = rec.vieta_residuals()
                if residuals is None:
                    suite.record(False, instance=instance, message="no real fixed points")
                    continue
                deviation = max(abs(r) for r in residuals)
                ok = (
                    deviation <= VIETA_TOL
                    and rec.below_theta(SETTLE_TOL)
                    and rec.strictly_increasing(SETTLE_TOL)
                    and rec.inertia().less == n
                )
                suite.record(ok, deviation, instance, "recurrence properties violated")
        return suite

    def _check_properties(self, suite: SuiteResult, g: Graph, s: float, instance: str) -> None:
        report = check_tree_properties(root_and_order(g, 0), s, self.config.solver)
        failed = [check.item for check in report.checks if check.status == FAIL]
        for check in report.checks:
            if check.status == FLAGGED:
                suite.note(f"{instance} s={s}", f"item {check.item} flagged: {check.values}")
        suite.record(not failed, instance=f"{instance} s={s}", message=f"items {failed} failed")

    def run_tree_properties(self, rng: np.random.Generator, trials: int) -> SuiteResult:
        """Tree property checklist on random trees at every grid value of s."""
        suite = SuiteResult("tree_properties")
        for _ in range(trials):
            g = random_tree(rng, int(rng.integers(2, MAX_TREE_ORDER + 1)))
            for s in PROPERTY_S:
                self._check_properties(suite, g, s, f"tree {_describe(g)}")
        return suite

    def _check_hjoin(
        self, suite: SuiteResult, trace: SuiteResult, spec: HJoinSpec, s: float, label: str
    ) -> None:
        instance = f"{label} s={s}"
        g = assemble_graph(spec)
        oracle = self._spectrum(g, s)
        self._check_trace(trace, g, s, oracle, instance)
        synthesized = hjoin_spectrum(spec, s, self.config.solver, self.config.group_tol)
        deviation = max_multiset_deviation(synthesized, oracle)
        suite.record(
            len(synthesized) == g.n and deviation <= HJOIN_TOL * max(1.0, abs(oracle.largest)),
            deviation,
            instance,
            "block/quotient spectrum differs from the oracle",
        )
        for i in range(spec.r):
            lam1 = component_lambda1(spec, i, s)
            row_sums = np.sum(block_matrix(spec, i, s).entries, axis=1)
            gap = float(np.max(np.abs(row_sums - lam1)))
            suite.record(
                gap <= ROW_SUM_TOL * max(1.0, abs(lam1)),
                gap,
                f"{instance} component={i}",
                "block row sums differ from lambda_1",
            )

    def run_hjoin_oracle(
        self, rng: np.random.Generator, trials: int, trace: SuiteResult
    ) -> SuiteResult:
        """H-join spectra against the oracle: worked examples plus random specs."""
        suite = SuiteResult("hjoin_oracle")
        for name, spec in reference_hjoins().items():
            for s in HJOIN_S:
                self._check_hjoin(suite, trace, spec, s, name)
        for _ in range(trials):
            spec = random_hjoin_spec(rng)
            for s in RANDOM_HJOIN_S:
                self._check_hjoin(suite, trace, spec, s, _describe_spec(spec))
        return suite

    def run_hjoin_closed_forms(self) -> SuiteResult:
        """Closed forms of the symmetric P3, P4 and C4 joins against the block spectrum."""
        suite = SuiteResult("hjoin_closed_forms")
        specs = reference_hjoins()
        for name, spec in specs.items():
            match = matching_closed_form(spec)
            if match is None:
                continue
            form_name, closed_form = match
            for s in (*HJOIN_S, 0.0):
                closed = closed_form(spec, s, self.config.solver, self.config.group_tol)
                general = hjoin_spectrum(spec, s, self.config.solver, self.config.group_tol)
                deviation = max_multiset_deviation(closed, general)
                suite.record(
                    deviation <= CLOSED_FORM_TOL * max(1.0, abs(general.largest)),
                    deviation,
                    f"{name} s={s}",
                    f"{form_name} closed form differs",
                )

        p3_join = specs["p3-c4-p2-c6"]
        at_one = hjoin_spectrum(p3_join, 1.0, self.config.solver, self.config.group_tol)
        deviation = max_multiset_deviation(at_one, Spectrum.from_values(P3_JOIN_SPECTRUM_AT_ONE))
        two_m = 2.0 * assemble_graph(p3_join).m
        suite.record(
            deviation <= HJOIN_TOL and abs(at_one.total() - two_m) <= HJOIN_TOL,
            deviation,
            "p3-c4-p2-c6 s=1",
            f"spectrum {at_one.format_grouped()} (sum {at_one.total():.9g}, 2m = {two_m:g})",
        )
        return suite

    def run_quotient_structure(self) -> SuiteResult:
        """Tridiagonal recurrence and periodic Jacobi form of the quotient matrix."""
        suite = SuiteResult("quotient_structure")
        for name, spec in reference_hjoins().items():
            for s in HJOIN_S:
                instance = f"{name} s={s}"
                if spec.h == cycle(spec.r):
                    check = periodic_jacobi_check(spec, s)
                    suite.record(
                        check.max_deviation <= ROW_SUM_TOL * max(1.0, abs(s) * spec.r),
                        check.max_deviation,
                        instance,
                        "quotient is not the periodic Jacobi matrix",
                    )
                    continue
                diag, offdiag = tridiagonal_parts(spec, s)
                quotient = symmetric_spectrum(quotient_matrix(spec, s).matrix, self.config.solver)
                scale = max(1.0, max(abs(v) for v in quotient)) ** spec.r
                worst = max(abs(tridiagonal_charpoly(diag, offdiag, lam)) for lam in quotient)
                suite.record(
                    worst <= CHARPOLY_TOL * scale,
                    worst / scale,
                    instance,
                    "characteristic polynomial does not vanish at a quotient eigenvalue",
                )
                if name == "p3-c4-p2-c6":
                    at_a = abs(tridiagonal_charpoly(diag, offdiag, component_lambda1(spec, 0, s)))
                    suite.record(
                        at_a <= CHARPOLY_TOL * scale,
                        at_a / scale,
                        instance,
                        "lambda_1 of the outer blocks is not a quotient eigenvalue",
                    )
        return suite

    def _check_bipartite(self, suite: SuiteResult, g: Graph, s: float, instance: str) -> None:
        positive = build_deformed(g, s)
        negative = build_deformed(g, -s)
        a = positive.spectrum(self.config.solver)
        b = negative.spectrum(self.config.solver)
        deviation = max_multiset_deviation(a, b)
        suite.record(
            deviation <= COSPECTRAL_TOL * max(1.0, abs(a.largest)),
            deviation,
            f"{instance} s={s}",
            "spectra at s and -s differ",
        )
        signs = bipartite_conjugation(g, s)
        conjugated = None
        if signs is not None:
            conjugated = positive.matrix.conjugate(np.diag(signs.entries))
        suite.record(
            conjugated is not None
            and bool(np.array_equal(conjugated.entries, negative.matrix.entries)),
            instance=f"{instance} s={s}",
            message="U M(s) U != M(-s)",
        )

    def run_bipartite(
        self, rng: np.random.Generator, trials: int, trace: SuiteResult
    ) -> SuiteResult:
        """Cospectrality of M(s) and M(-s) on random bipartite graphs."""
        suite = SuiteResult("bipartite_cospectral")
        for _ in range(trials):
            g = random_bipartite(rng, int(rng.integers(2, MAX_GRAPH_ORDER + 1)))
            for s in BIPARTITE_S:
                self._check_bipartite(suite, g, s, _describe(g))
        return suite

    def _check_bounds(
        self, suite: SuiteResult, g: Graph, s: float, spectrum: Spectrum, instance: str
    ) -> None:
        lam_max, lam_min = spectrum.largest, spectrum.smallest
        upper = upper_bound_radius(g, s, self.config.solver)
        lower = lower_bound_radius(g, s)
        ok = lam_max <= upper + BOUND_SLACK and (lower is None or lower <= lam_max + BOUND_SLACK)
        ok = ok and lam_max >= average_eigenvalue(g, s) - BOUND_SLACK
        suite.record(
            ok,
            instance=f"{instance} s={s}",
            message=f"lower={lower!r} lambda_max={lam_max!r} upper={upper!r}",
        )
        if abs(lam_min) > lam_max + BOUND_SLACK:
            suite.note(f"{instance} s={s}", f"|lambda_min| = {abs(lam_min):.9g} > lambda_max")

    def run_bounds(self, rng: np.random.Generator, trials: int) -> SuiteResult:
        """Lower and upper bounds on random connected graphs, equality on stars."""
        suite = SuiteResult("bounds")
        for _ in range(trials):
            g = random_connected(rng, int(rng.integers(2, MAX_GRAPH_ORDER + 1)))
            for s in BOUNDS_S:
                self._check_bounds(suite, g, s, self._spectrum(g, s), _describe(g))

        for leaves in range(1, 11):
            g = star(leaves)
            for s in STAR_S:
                lower = lower_bound_radius(g, s)
                if lower is None:
                    continue
                gap = abs(lower - self._spectrum(g, s).largest)
                suite.record(
                    gap <= STAR_TOL * max(1.0, lower),
                    gap,
                    f"star leaves={leaves} s={s}",
                    "lower bound not attained",
                )
        return suite

    def _check_edge(
        self, suite: SuiteResult, g: Graph, edge: tuple[int, int], s: float, instance: str
    ) -> None:
        report = verify_edge_monotonicity(g, edge, s, self.config.solver)
        label = f"{instance} edge={list(edge)} s={s}"
        if report.status == "finding":
            suite.note(
                label,
                f"lambda_max rises from {report.graph_radius:.9g} to "
                f"{report.subgraph_radius:.9g} after deleting the edge",
            )
        suite.record(report.status != "fail", instance=label, message=str(report.to_dict()))

        perturbation = perturbation_matrix(g, edge, s)
        values = symmetric_spectrum(perturbation, self.config.solver)
        expected = edge_perturbation(s)
        target = Spectrum.from_values(
            [expected.eigenvalue_low, expected.eigenvalue_high] + [0.0] * (g.n - 2)
        )
        deviation = max_multiset_deviation(values, target)
        psd_ok = expected.positive_semidefinite == (abs(s) >= 1.0 or s == 0.0)
        suite.record(
            deviation <= COSPECTRAL_TOL * max(1.0, s * s + abs(s)) and psd_ok,
            deviation,
            label,
            "edge perturbation spectrum",
        )

    def run_edge_monotonicity(self, rng: np.random.Generator, trials: int) -> SuiteResult:
        """Edge deletion against lambda_max, single edges and deletion chains."""
        suite = SuiteResult("edge_monotonicity")
        for _ in range(trials):
            g = random_connected(rng, int(rng.integers(3, MAX_TREE_ORDER + 1)))
            edges = list(g.sorted_edges)
            edge = edges[int(rng.integers(0, len(edges)))]
            instance = _describe(g)
            suite.record(
                g.remove_edge(*edge).add_edge(*edge) == g,
                instance=f"{instance} edge={list(edge)}",
                message="remove/add round trip changed the graph",
            )
            for s in MONOTONE_S:
                self._check_edge(suite, g, edge, s, instance)

            chain = [edges[i] for i in rng.permutation(len(edges))[: max(1, len(edges) // 2)]]
            for s in MONOTONE_S:
                if not in_monotone_regime(s):
                    continue
                report = verify_subgraph_monotonicity(g, chain, s, self.config.solver)
                suite.record(
                    report.status != "fail",
                    instance=f"{instance} chain={[list(e) for e in chain]} s={s}",
                    message=f"radii {report.radii}",
                )
        return suite


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
