#!/usr/bin/env python3
"""
Exception types raised by the domain layer.

Every error derives from a builtin exception so callers that only know about
ValueError, KeyError or ArithmeticError keep working.
"""

__version__ = "0.1.0"
__author__ = "John Ayers"


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "errors",
        "description": "Domain exception hierarchy",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


class ParameterError(ValueError):
    """Invalid numeric or size parameter."""


class StructureError(ValueError):
    """Graph structure does not meet an operation's requirement."""


class RegularityError(StructureError):
    """An H-join component is not regular.

    Attributes:
        component_index: 0-based index of the offending component
    """

    def __init__(self, component_index: int, message: str) -> None:
        super().__init__(f"component {component_index}: {message}")
        self.component_index = component_index


class EdgeNotFoundError(KeyError):
    """Requested edge is not in the graph."""

    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge {{{u}, {v}}} not in graph")
        self.edge = (min(u, v), max(u, v))

    def __str__(self) -> str:
        return str(self.args[0])


class NumericError(ArithmeticError):
    """Matrix contains NaN or infinite entries."""


class SingularPivotError(ArithmeticError):
    """Path recurrence reached a zero pivot.

    Attributes:
        index: 1-based position j with Z_j == 0
        partial: values Z_1..Z_j computed before stopping
    """

    def __init__(self, index: int, partial: list[float]) -> None:
        super().__init__(
            f"singular pivot at Z_{index} = {partial[-1]:.3e}; "
            "lambda is an eigenvalue of a leading sub-path"
        )
        self.index = index
        self.partial = partial


class PreconditionError(ValueError):
    """Hypothesis of a closed-form result does not hold."""


class AssemblyError(ValueError):
    """H-join graph cannot be assembled from spectrum-only components."""


class ConsistencyError(RuntimeError):
    """Internal cross-check failed (analytic and numeric values disagree)."""


class EdgeListParseError(ValueError):
    """Malformed edge-list file.

    Attributes:
        line_number: 1-based line where parsing failed
    """

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class SpecParseError(ValueError):
    """Malformed H-join specification document."""


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
