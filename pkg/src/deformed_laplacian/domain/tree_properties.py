#!/usr/bin/env python3
"""
Checklist of structural spectral properties of M_T(s) for trees.

Each item is evaluated with the dense oracle and, where counting is involved,
cross-checked against inertia counts from the tree diagonalization.
"""

import math
from dataclasses import dataclass, field
from typing import Any

from deformed_laplacian.domain.deformed import build_deformed, check_s
from deformed_laplacian.domain.dense_eigen import JACOBI
from deformed_laplacian.domain.errors import ParameterError, StructureError
from deformed_laplacian.domain.graph import Graph, RootedTree
from deformed_laplacian.domain.tree_inertia import count_relative

__version__ = "0.1.0"
__author__ = "John Ayers"

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "n/a"
FLAGGED = "flagged"

BOUND_SLACK = 1e-9
ITEM_6 = "lambda_max > 1 + 2|s| + s^2 if Δ >= 4, > 1 + √3|s| + s^2 if Δ >= 3"


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "tree_properties",
        "description": "Tree spectral property checklist",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one checklist item.

    Attributes:
        item: Item number 1..7
        statement: What was checked
        status: pass, fail, n/a or flagged
        values: Computed quantities behind the verdict
    """

    item: int
    statement: str
    status: str
    values: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        data: dict[str, Any] = {"item": self.item, "statement": self.statement}
        return {**data, "status": self.status, **self.values}


@dataclass(frozen=True)
class TreePropertyReport:
    """All checklist items for one tree and parameter.

    Attributes:
        n: Tree order
        s: Deformation parameter
        checks: Item outcomes in item order
    """

    n: int
    s: float
    checks: tuple[PropertyCheck, ...]

    @property
    def passed(self) -> bool:
        """No item failed (flagged items do not count as failures)."""
        return all(check.status != FAIL for check in self.checks)

    def item(self, number: int) -> PropertyCheck:
        """Look up one item by number."""
        return next(check for check in self.checks if check.item == number)

    def format_console(self, precision: int = 9) -> str:
        """Render one line per item."""
        lines = [f"tree n={self.n} s={self.s:.{precision}g}"]
        for check in self.checks:
            details = " ".join(
                f"{key}={value:.{precision}g}" if isinstance(value, float) else f"{key}={value}"
                for key, value in check.values.items()
            )
            lines.append(f"({check.item}) [{check.status}] {check.statement} {details}".rstrip())
        return "\n".join(lines)


def _has_pendant_p2(g: Graph) -> bool:
    return any(g.degree(g.neighbors[leaf][0]) == 2 for leaf in g.pendant_vertices())


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def check_tree_properties(t: RootedTree, s: float, solver: str = JACOBI) -> TreePropertyReport:
    """Evaluate the seven tree properties of M_T(s).

    Items 3 to 6 are strict inequalities that collapse at s = 0, where
    M_T(0) = I, and are reported as not applicable there. The Δ >= 3 variant
    of item 6 is flagged rather than failed when violated.

    Args:
        t: Rooted tree with at least two vertices
        s: Deformation parameter
        solver: Dense eigensolver backend

    Returns:
        TreePropertyReport

    Raises:
        StructureError: If t.graph is not a tree
        ParameterError: If the tree has fewer than two vertices
    """
    s = check_s(s)
    graph = t.graph
    if not graph.is_tree():
        raise StructureError("graph is not a tree")
    if graph.n < 2:
        raise ParameterError("property checklist needs at least two vertices")

    spectrum = build_deformed(graph, s).spectrum(solver=solver)
    lam_min, lam_max = spectrum.smallest, spectrum.largest
    at_zero = count_relative(t, s, 0.0)
    s_abs, s2 = abs(s), s * s
    delta = graph.max_degree()
    degenerate = s == 0.0
    checks: list[PropertyCheck] = []

    has_zero = at_zero.equal > 0
    checks.append(
        PropertyCheck(
            1,
            "0 is an eigenvalue iff |s| = 1",
            _verdict(has_zero == (s_abs == 1.0)),
            {"zero_multiplicity": at_zero.equal, "lambda_min": lam_min},
        )
    )

    positive_definite = at_zero.less == 0 and at_zero.equal == 0
    checks.append(
        PropertyCheck(
            2,
            "positive definite iff |s| < 1",
            _verdict(positive_definite == (s_abs < 1.0)),
            {"positive_definite": positive_definite, "lambda_min": lam_min},
        )
    )

    if degenerate:
        checks.append(PropertyCheck(3, "lambda_max > 1", NOT_APPLICABLE, {"lambda_max": lam_max}))
    else:
        checks.append(
            PropertyCheck(3, "lambda_max > 1", _verdict(lam_max > 1.0), {"lambda_max": lam_max})
        )

    threshold = 1.0 + s2
    if degenerate or not _has_pendant_p2(graph):
        checks.append(PropertyCheck(4, "pendant P2 forces lambda_max > 1 + s^2", NOT_APPLICABLE))
    else:
        checks.append(
            PropertyCheck(
                4,
                "pendant P2 forces lambda_max > 1 + s^2",
                _verdict(lam_max > threshold),
                {"lambda_max": lam_max, "threshold": threshold},
            )
        )

    if degenerate:
        checks.append(
            PropertyCheck(5, "deleting a pendant vertex lowers lambda_max", NOT_APPLICABLE)
        )
    else:
        gaps = [
            lam_max - build_deformed(graph.delete_vertex(leaf), s).lambda_max(solver)
            for leaf in graph.pendant_vertices()
        ]
        checks.append(
            PropertyCheck(
                5,
                "deleting a pendant vertex lowers lambda_max",
                _verdict(min(gaps) > 0.0),
                {"pendant_vertices": len(gaps), "min_gap": min(gaps)},
            )
        )

    if degenerate or delta < 3:
        checks.append(PropertyCheck(6, ITEM_6, NOT_APPLICABLE))
    else:
        weak = 1.0 + math.sqrt(3.0) * s_abs + s2
        values: dict[str, Any] = {"lambda_max": lam_max, "delta": delta, "sqrt3_threshold": weak}
        status = PASS if lam_max > weak else FLAGGED
        if delta >= 4:
            strong = 1.0 + 2.0 * s_abs + s2
            values["threshold"] = strong
            if lam_max <= strong:
                status = FAIL
        checks.append(PropertyCheck(6, ITEM_6, status, values))

    legs = graph.starlike_legs()
    if legs is None:
        checks.append(PropertyCheck(7, "starlike bound on lambda_max", NOT_APPLICABLE))
    else:
        k = len(legs)
        bound = 1.0 + s2 * (delta - 1) + s_abs * k / math.sqrt(k - 1)
        checks.append(
            PropertyCheck(
                7,
                "starlike bound on lambda_max",
                _verdict(lam_max <= bound + BOUND_SLACK),
                {"lambda_max": lam_max, "bound": bound, "legs": legs},
            )
        )

    return TreePropertyReport(n=graph.n, s=s, checks=tuple(checks))


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
