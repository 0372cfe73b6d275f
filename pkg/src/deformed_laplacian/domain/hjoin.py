#!/usr/bin/env python3
"""
H-join of regular graphs and the synthesis of its deformed Laplacian spectrum.

Given a connected template H on r vertices and regular graphs G_1..G_r, the
H-join joins every vertex of G_i to every vertex of G_j whenever ij is an
edge of H. Each diagonal block M_i(s) has the all-ones vector as an
eigenvector with eigenvalue λ_1(M_i(s)) = s^2(d_i + N_i - 1) - s·d_i + 1,
where N_i is the total order of the neighbours of i in H. The spectrum of
M_G(s) is every block spectrum with one copy of λ_1(M_i(s)) removed, plus the
r eigenvalues of the quotient matrix F_r(s).
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from deformed_laplacian.domain.deformed import check_s
from deformed_laplacian.domain.dense_eigen import JACOBI, SymMatrix, symmetric_spectrum
from deformed_laplacian.domain.errors import (
    AssemblyError,
    ParameterError,
    PreconditionError,
    RegularityError,
    StructureError,
)
from deformed_laplacian.domain.graph import Edge, Graph, complete, cycle, path
from deformed_laplacian.domain.spectrum import DEFAULT_GROUP_TOL, Spectrum, union

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

COMPONENT_FAMILIES = ("cycle", "complete", "path", "empty", "edges", "spectrum")

# Relative gap allowed when deleting λ_1 from a computed block spectrum.
DELETION_TOL = 1e-8
SPECTRUM_DEGREE_TOL = 1e-9


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "hjoin",
        "description": "H-join assembly and spectrum synthesis",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass(frozen=True)
class ComponentSpec:
    """One regular component of an H-join.

    Attributes:
        family: cycle, complete, path, empty, edges or spectrum
        n: Order of the component
        edges: Explicit edge list (edges family)
        values: Adjacency spectrum (spectrum family)
        degree: Regularity degree (spectrum family; derived otherwise)
    """

    family: str
    n: int
    edges: tuple[Edge, ...] = ()
    values: tuple[float, ...] = ()
    degree: int | None = None

    def __post_init__(self) -> None:
        """Validate family and size."""
        if self.family not in COMPONENT_FAMILIES:
            raise ParameterError(
                f"unknown component family '{self.family}' "
                f"(choose from {', '.join(COMPONENT_FAMILIES)})"
            )
        if self.n < 1:
            raise ParameterError("component order must be >= 1")
        if self.family == "cycle" and self.n < 3:
            raise ParameterError("cycle component needs at least 3 vertices")
        if self.family == "spectrum":
            if self.degree is None:
                raise ParameterError("spectrum component needs a degree")
            if len(self.values) != self.n:
                raise ParameterError(
                    f"spectrum component lists {len(self.values)} values for order {self.n}"
                )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ComponentSpec":
        """Create a component from its JSON form.

        Raises:
            ParameterError: On missing or malformed fields
        """
        family = data.get("family")
        if not isinstance(family, str):
            raise ParameterError("component needs a 'family' string")
        if family == "spectrum":
            values = tuple(float(v) for v in data.get("values", ()))
            if "degree" not in data:
                raise ParameterError("spectrum component needs a 'degree'")
            return cls(
                family=family,
                n=int(data.get("n", len(values))),
                values=values,
                degree=int(data["degree"]),
            )
        if "n" not in data:
            raise ParameterError(f"{family} component needs 'n'")
        edges = tuple((int(u), int(v)) for u, v in data.get("edges", ()))
        return cls(family=family, n=int(data["n"]), edges=edges)

    def to_dict(self) -> dict[str, Any]:
        """Convert to the JSON form."""
        data: dict[str, Any] = {"family": self.family, "n": self.n}
        if self.family == "edges":
            data["edges"] = [list(edge) for edge in self.edges]
        if self.family == "spectrum":
            data["values"] = list(self.values)
            data["degree"] = self.degree
        return data

    def graph(self) -> Graph | None:
        """The component graph, or None when only its spectrum is known."""
        match self.family:
            case "cycle":
                return cycle(self.n)
            case "complete":
                return complete(self.n)
            case "path":
                return path(self.n)
            case "empty":
                return Graph(n=self.n)
            case "edges":
                return Graph.from_edges(self.n, self.edges)
        return None

    def regular_degree(self) -> int | None:
        """Common vertex degree, or None if the component is not regular."""
        if self.family == "spectrum":
            return self.degree
        graph = self.graph()
        return graph.is_regular() if graph is not None else None


def adjacency_spectrum_of(
    component: ComponentSpec, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Adjacency spectrum of a component.

    Cycles, complete graphs, K_1, K_2 and empty graphs use closed forms; an
    explicit edge list goes through the dense oracle.
    """
    n = component.n
    match component.family:
        case "spectrum":
            values = list(component.values)
        case "cycle":
            values = [2.0 * math.cos(2.0 * math.pi * k / n) for k in range(n)]
        case "complete":
            values = [float(n - 1)] + [-1.0] * (n - 1)
        case "empty":
            values = [0.0] * n
        case "path" if n <= 2:
            values = [0.0] if n == 1 else [-1.0, 1.0]
        case _:
            graph = component.graph()
            if graph is None:
                raise AssemblyError("component has no graph to diagonalize")
            if graph.m == 0:
                values = [0.0] * n
            else:
                return symmetric_spectrum(
                    SymMatrix.from_array(graph.adjacency_matrix()),
                    solver=solver,
                    group_tol=group_tol,
                )
    return Spectrum.from_values(values, group_tol=group_tol)


@dataclass(frozen=True)
class HJoinSpec:
    """Template graph plus its ordered components.

    Component i attaches to vertex i of the template.

    Attributes:
        h: Template graph of order r
        components: One ComponentSpec per template vertex
    """

    h: Graph
    components: tuple[ComponentSpec, ...]

    @property
    def r(self) -> int:
        """Order of the template."""
        return self.h.n

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "HJoinSpec":
        """Create a spec from ``{"h": {"n": r, "edges": [...]}, "components": [...]}``.

        Raises:
            ParameterError: On missing or malformed fields
        """
        try:
            h_data = data["h"]
            h = Graph.from_edges(int(h_data["n"]), h_data.get("edges", []))
            components = tuple(ComponentSpec.from_dict(item) for item in data["components"])
        except (KeyError, TypeError, AttributeError) as e:
            raise ParameterError(f"malformed H-join specification: {e}") from e
        return cls(h=h, components=components)

    def to_dict(self) -> dict[str, Any]:
        """Convert to the JSON form."""
        return {
            "h": {"n": self.h.n, "edges": [list(edge) for edge in self.h.sorted_edges]},
            "components": [component.to_dict() for component in self.components],
        }


@dataclass(frozen=True)
class HJoinValidation:
    """Structure data derived while validating a spec.

    Attributes:
        r: Template order
        orders: n_i per component
        degrees: d_i per component
        neighbor_orders: N_i per component
    """

    r: int
    orders: tuple[int, ...]
    degrees: tuple[int, ...]
    neighbor_orders: tuple[int, ...] = field(default_factory=tuple)

    @property
    def total_order(self) -> int:
        """Order of the joined graph."""
        return sum(self.orders)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "r": self.r,
            "n": list(self.orders),
            "d": list(self.degrees),
            "N": list(self.neighbor_orders),
            "total_order": self.total_order,
        }


def validate_spec(spec: HJoinSpec) -> HJoinValidation:
    """Check template size, template connectivity and component regularity.

    Returns:
        HJoinValidation with n_i, d_i and N_i

    Raises:
        StructureError: If the component count differs from r or H is disconnected
        RegularityError: If a component is not regular (names the component)
    """
    if len(spec.components) != spec.r:
        raise StructureError(
            f"template has {spec.r} vertices but {len(spec.components)} components"
        )
    if not spec.h.is_connected():
        raise StructureError("template graph H must be connected")

    degrees = []
    for index, component in enumerate(spec.components):
        degree = component.regular_degree()
        if degree is None:
            raise RegularityError(index, f"{component.family}({component.n}) is not regular")
        if component.family == "spectrum":
            top = max(component.values)
            if abs(top - degree) > SPECTRUM_DEGREE_TOL * max(1.0, degree):
                raise RegularityError(
                    index, f"largest adjacency eigenvalue {top} does not equal degree {degree}"
                )
        degrees.append(degree)

    orders = tuple(component.n for component in spec.components)
    neighbor_orders = tuple(sum(orders[j] for j in spec.h.neighbors[i]) for i in range(spec.r))
    return HJoinValidation(
        r=spec.r, orders=orders, degrees=tuple(degrees), neighbor_orders=neighbor_orders
    )


def _check_index(spec: HJoinSpec, i: int) -> None:
    if not 0 <= i < spec.r:
        raise ParameterError(f"component index {i} outside 0..{spec.r - 1}")


def offsets(spec: HJoinSpec) -> tuple[int, ...]:
    """Index of the first vertex of each component block in the joined graph."""
    starts = np.concatenate(([0], np.cumsum([c.n for c in spec.components])[:-1]))
    return tuple(int(v) for v in starts)


def assemble_graph(spec: HJoinSpec) -> Graph:
    """Build the H-join with component blocks laid out in order.

    Raises:
        AssemblyError: If some component is known only by its spectrum
    """
    validation = validate_spec(spec)
    starts = offsets(spec)
    pairs: list[Edge] = []
    graphs = []
    for index, component in enumerate(spec.components):
        graph = component.graph()
        if graph is None:
            raise AssemblyError(f"component {index} is given only by its spectrum")
        graphs.append(graph)

    for index, graph in enumerate(graphs):
        base = starts[index]
        pairs.extend((base + u, base + v) for u, v in graph.sorted_edges)
    for i, j in spec.h.sorted_edges:
        pairs.extend(
            (starts[i] + a, starts[j] + b)
            for a in range(spec.components[i].n)
            for b in range(spec.components[j].n)
        )
    return Graph.from_edges(validation.total_order, pairs)


def component_lambda1(spec: HJoinSpec, i: int, s: float) -> float:
    """λ_1(M_i(s)) = s^2(d_i + N_i - 1) - s·d_i + 1 for component i (0-based)."""
    _check_index(spec, i)
    s = check_s(s)
    validation = validate_spec(spec)
    d, big_n = validation.degrees[i], validation.neighbor_orders[i]
    return s * s * (d + big_n - 1) - s * d + 1.0


def component_block_spectrum(
    spec: HJoinSpec,
    i: int,
    s: float,
    solver: str = JACOBI,
    group_tol: float = DEFAULT_GROUP_TOL,
) -> Spectrum:
    """Spectrum of block M_i(s): {s^2(d_i + N_i - 1) - s·λ_k(A(G_i)) + 1}."""
    _check_index(spec, i)
    s = check_s(s)
    validation = validate_spec(spec)
    shift = s * s * (validation.degrees[i] + validation.neighbor_orders[i] - 1) + 1.0
    adjacency = adjacency_spectrum_of(spec.components[i], solver, group_tol).as_array()
    return Spectrum.from_values(shift - s * adjacency, group_tol=group_tol)


def block_matrix(spec: HJoinSpec, i: int, s: float) -> SymMatrix:
    """Diagonal block M_i(s) of M_G(s) for a component given as a graph."""
    _check_index(spec, i)
    s = check_s(s)
    validation = validate_spec(spec)
    graph = spec.components[i].graph()
    if graph is None:
        raise AssemblyError(f"component {i} is given only by its spectrum")
    entries = -s * graph.adjacency_matrix()
    np.fill_diagonal(
        entries, 1.0 + s * s * (validation.degrees[i] + validation.neighbor_orders[i] - 1)
    )
    return SymMatrix.from_array(entries)


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    """Quotient matrix F_r(s) of the H-join.

    Attributes:
        r: Order
        matrix: Diagonal λ_1(M_i(s)), entry -s·sqrt(n_i n_j) on template edges
    """

    r: int
    matrix: SymMatrix


def quotient_matrix(spec: HJoinSpec, s: float) -> QuotientMatrix:
    """Build F_r(s)."""
    s = check_s(s)
    validation = validate_spec(spec)
    entries = np.zeros((spec.r, spec.r))
    for i in range(spec.r):
        d, big_n = validation.degrees[i], validation.neighbor_orders[i]
        entries[i, i] = s * s * (d + big_n - 1) - s * d + 1.0
    for i, j in spec.h.edges:
        weight = -s * math.sqrt(validation.orders[i] * validation.orders[j])
        entries[i, j] = weight
        entries[j, i] = weight
    return QuotientMatrix(r=spec.r, matrix=SymMatrix.from_array(entries))


def hjoin_spectrum(
    spec: HJoinSpec, s: float, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Spectrum of M_G(s) for the H-join without assembling the graph.

    Raises:
        ConsistencyError: If λ_1 cannot be matched in a computed block spectrum
    """
    s = check_s(s)
    validate_spec(spec)
    pieces = []
    for i in range(spec.r):
        lam1 = component_lambda1(spec, i, s)
        block = component_block_spectrum(spec, i, s, solver, group_tol)
        pieces.append(block.without_nearest(lam1, DELETION_TOL * max(1.0, abs(lam1))))
    pieces.append(symmetric_spectrum(quotient_matrix(spec, s).matrix, solver, group_tol))
    result = union(pieces, group_tol=group_tol)
    logger.debug(f"H-join spectrum: r={spec.r} n={len(result)} s={s}")
    return result


def tridiagonal_charpoly(diag: Sequence[float], offdiag: Sequence[float], lam: float) -> float:
    """det(λI - F) for symmetric tridiagonal F.

    Uses f_0 = 1, f_1 = λ - a_1 and f_k = (λ - a_k) f_{k-1} - b_{k-1}^2 f_{k-2}.

    Raises:
        ParameterError: If len(offdiag) != len(diag) - 1
    """
    if len(diag) == 0:
        return 1.0
    if len(offdiag) != len(diag) - 1:
        raise ParameterError(
            f"need {len(diag) - 1} off-diagonal entries for {len(diag)} diagonal entries"
        )
    f_prev, f_curr = 1.0, lam - diag[0]
    for k in range(1, len(diag)):
        f_prev, f_curr = f_curr, (lam - diag[k]) * f_curr - offdiag[k - 1] ** 2 * f_prev
    return f_curr


def _is_labelled_path(h: Graph) -> bool:
    return h.n >= 1 and h == path(h.n)


def _is_labelled_cycle(h: Graph) -> bool:
    return h.n >= 3 and h == cycle(h.n)


def tridiagonal_parts(spec: HJoinSpec, s: float) -> tuple[list[float], list[float]]:
    """Diagonal and off-diagonal of F_r(s) for a template path 0-1-...-(r-1).

    Raises:
        PreconditionError: If H is not that labelled path
    """
    if not _is_labelled_path(spec.h):
        raise PreconditionError("template is not the path 0-1-...-(r-1)")
    entries = quotient_matrix(spec, s).matrix.entries
    return list(np.diag(entries)), list(np.diag(entries, 1))


@dataclass(frozen=True)
class PeriodicJacobiCheck:
    """Comparison of F_r(s) with its periodic Jacobi form for a cycle template.

    Attributes:
        diag: Diagonal entries
        offdiag: Super-diagonal entries (i, i+1)
        corner: Corner entry -s·sqrt(n_1 n_r)
        max_deviation: Largest entrywise gap between F_r(s) and the rebuilt matrix
    """

    diag: tuple[float, ...]
    offdiag: tuple[float, ...]
    corner: float
    max_deviation: float


def periodic_jacobi_check(spec: HJoinSpec, s: float) -> PeriodicJacobiCheck:
    """Rebuild F_r(s) as a tridiagonal matrix plus equal corners and compare.

    Raises:
        PreconditionError: If H is not the cycle 0-1-...-(r-1)-0
    """
    if not _is_labelled_cycle(spec.h):
        raise PreconditionError("template is not the cycle 0-1-...-(r-1)-0")
    s = check_s(s)
    validation = validate_spec(spec)
    quotient = quotient_matrix(spec, s).matrix.entries
    r = spec.r
    diag = tuple(float(v) for v in np.diag(quotient))
    orders = validation.orders
    offdiag = tuple(-s * math.sqrt(orders[i] * orders[i + 1]) for i in range(r - 1))
    corner = -s * math.sqrt(orders[0] * orders[r - 1])
    rebuilt = np.diag(diag) + np.diag(offdiag, 1) + np.diag(offdiag, -1)
    rebuilt[0, r - 1] = corner
    rebuilt[r - 1, 0] = corner
    return PeriodicJacobiCheck(
        diag=diag,
        offdiag=offdiag,
        corner=corner,
        max_deviation=float(np.max(np.abs(rebuilt - quotient))),
    )


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
