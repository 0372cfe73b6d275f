#!/usr/bin/env python3
"""
Closed-form spectra for symmetric H-joins over P_3, P_4 and C_4.

When the components are arranged symmetrically the quotient matrix splits
into small blocks whose eigenvalues are roots of quadratics. All three forms
return the full spectrum of M_G(s) and must agree with hjoin_spectrum.
"""

import math

from deformed_laplacian.domain.deformed import check_s
from deformed_laplacian.domain.dense_eigen import JACOBI
from deformed_laplacian.domain.errors import PreconditionError
from deformed_laplacian.domain.graph import cycle, path
from deformed_laplacian.domain.hjoin import (
    DELETION_TOL,
    ComponentSpec,
    HJoinSpec,
    adjacency_spectrum_of,
    component_block_spectrum,
    component_lambda1,
    validate_spec,
)
from deformed_laplacian.domain.spectrum import (
    DEFAULT_GROUP_TOL,
    Spectrum,
    spectra_equal,
    union,
)

__version__ = "0.1.0"
__author__ = "John Ayers"

TWIN_TOL = 1e-9


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "closed_forms",
        "description": "Closed-form spectra of symmetric H-joins",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def _same_block(first: ComponentSpec, second: ComponentSpec, solver: str) -> bool:
    if first == second:
        return True
    if first.n != second.n or first.regular_degree() != second.regular_degree():
        return False
    return spectra_equal(
        adjacency_spectrum_of(first, solver), adjacency_spectrum_of(second, solver), TWIN_TOL
    )


def _quadratic_roots(total: float, gap: float, coupling: float) -> tuple[float, float]:
    """Roots ½(total ± sqrt(gap^2 + coupling)) of a 2x2 symmetric block."""
    root = math.sqrt(gap * gap + coupling)
    return 0.5 * (total - root), 0.5 * (total + root)


def _assemble(
    spec: HJoinSpec,
    s: float,
    removed: list[float],
    roots: list[float],
    solver: str,
    group_tol: float,
) -> Spectrum:
    blocks = union(
        (component_block_spectrum(spec, i, s, solver, group_tol) for i in range(spec.r)),
        group_tol=group_tol,
    )
    for value in removed:
        blocks = blocks.without_nearest(value, DELETION_TOL * max(1.0, abs(value)))
    return union([blocks, Spectrum.from_values(roots, group_tol=group_tol)], group_tol=group_tol)


def closed_form_p3_symmetric(
    spec: HJoinSpec, s: float, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Spectrum of the P_3-join (G_1, G_2, G_3) with d_1 = d_3.

    The quotient has eigenvalue a = λ_1(M_1(s)) = λ_1(M_3(s)) and the two
    roots ½(a + b ± sqrt((a - b)^2 + 4s^2 n_2(n_1 + n_3))) with
    b = λ_1(M_2(s)) = s^2(d_2 + n_1 + n_3 - 1) - s·d_2 + 1.

    Raises:
        PreconditionError: If H is not the path 0-1-2 or d_1 != d_3
    """
    s = check_s(s)
    if spec.h != path(3):
        raise PreconditionError("template must be the path 0-1-2")
    validation = validate_spec(spec)
    if validation.degrees[0] != validation.degrees[2]:
        raise PreconditionError("outer components must have equal degree")
    n1, n2, n3 = validation.orders
    a = component_lambda1(spec, 0, s)
    b = component_lambda1(spec, 1, s)
    roots = _quadratic_roots(a + b, a - b, 4.0 * s * s * n2 * (n1 + n3))
    return _assemble(spec, s, [a, b], list(roots), solver, group_tol)


def _check_palindrome(spec: HJoinSpec, solver: str) -> None:
    first, second, third, fourth = spec.components
    if not (_same_block(first, fourth, solver) and _same_block(second, third, solver)):
        raise PreconditionError("components must read (G_1, G_2, G_2, G_1)")


def closed_form_p4_palindrome(
    spec: HJoinSpec, s: float, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Spectrum of the P_4-join (G_1, G_2, G_2, G_1).

    With a = λ_1(M_1(s)) and b = λ_1(M_2(s)) the quotient eigenvalues are
    ½(a + b + s·n_2 ± sqrt((a - b - s·n_2)^2 + 4s^2 n_1 n_2)) and
    ½(a + b - s·n_2 ± sqrt((a - b + s·n_2)^2 + 4s^2 n_1 n_2)).

    Raises:
        PreconditionError: If H is not the path 0-1-2-3 or the components are not palindromic
    """
    s = check_s(s)
    if spec.h != path(4):
        raise PreconditionError("template must be the path 0-1-2-3")
    validation = validate_spec(spec)
    _check_palindrome(spec, solver)
    n1, n2 = validation.orders[0], validation.orders[1]
    a = component_lambda1(spec, 0, s)
    b = component_lambda1(spec, 1, s)
    coupling = 4.0 * s * s * n1 * n2
    roots = [
        *_quadratic_roots(a + b + s * n2, a - b - s * n2, coupling),
        *_quadratic_roots(a + b - s * n2, a - b + s * n2, coupling),
    ]
    return _assemble(spec, s, [a, a, b, b], roots, solver, group_tol)


def closed_form_c4_palindrome(
    spec: HJoinSpec, s: float, solver: str = JACOBI, group_tol: float = DEFAULT_GROUP_TOL
) -> Spectrum:
    """Spectrum of the C_4-join (G_1, G_2, G_2, G_1).

    Each outer component is adjacent to its twin and to one inner component,
    so a = s^2(d_1 + n_1 + n_2 - 1) - s·d_1 + 1, and likewise for b. The
    quotient eigenvalues are
    ½(a + b + s(n_1 + n_2) ± sqrt((a - b + s(n_1 - n_2))^2 + 4s^2 n_1 n_2)) and
    ½(a + b - s(n_1 + n_2) ± sqrt((a - b - s(n_1 - n_2))^2 + 4s^2 n_1 n_2)).

    Raises:
        PreconditionError: If H is not the cycle 0-1-2-3-0 or the components are not palindromic
    """
    s = check_s(s)
    if spec.h != cycle(4):
        raise PreconditionError("template must be the cycle 0-1-2-3-0")
    validation = validate_spec(spec)
    _check_palindrome(spec, solver)
    n1, n2 = validation.orders[0], validation.orders[1]
    a = component_lambda1(spec, 0, s)
    b = component_lambda1(spec, 1, s)
    coupling = 4.0 * s * s * n1 * n2
    roots = [
        *_quadratic_roots(a + b + s * (n1 + n2), a - b + s * (n1 - n2), coupling),
        *_quadratic_roots(a + b - s * (n1 + n2), a - b - s * (n1 - n2), coupling),
    ]
    return _assemble(spec, s, [a, a, b, b], roots, solver, group_tol)


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
