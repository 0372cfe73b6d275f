#!/usr/bin/env python3
"""
Service for eigenvalue sweeps over the deformation parameter.

Evaluates the spectrum of M(s) at evenly spaced s values for a graph or an
H-join specification, optionally across a thread pool.
"""

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed

from deformed_laplacian.domain.deformed import build_deformed
from deformed_laplacian.domain.graph import Graph
from deformed_laplacian.domain.hjoin import HJoinSpec, hjoin_spectrum, validate_spec
from deformed_laplacian.domain.sweep import SweepRow, check_rows, sample_points
from deformed_laplacian.infrastructure.config import SpectralConfig

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)

Evaluator = Callable[[float], tuple[float, ...]]


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "sweep_service",
        "description": "Service for eigenvalue sweeps over s",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


class SweepService:
    """Application service for parameter sweeps."""

    def __init__(self, config: SpectralConfig | None = None) -> None:
        """Initialize the sweep service.

        Args:
            config: Numerical settings; workers > 1 enables the thread pool
        """
        self.config = config if config is not None else SpectralConfig()

    def sweep_graph(
        self,
        g: Graph,
        s_from: float,
        s_to: float,
        steps: int,
        progress_callback: Callable[[int, int], None] | None = None,
    ) -> list[SweepRow]:
        """Sweep the spectrum of M_G(s).

        Args:
            g: Input graph
            s_from: First s value
            s_to: Last s value
            steps: Number of samples, including both ends
            progress_callback: Optional callback(completed, total)

        Returns:
            Rows sorted by s

        Raises:
            ParameterError: If s_from >= s_to or steps < 2
        """

        def evaluate(s: float) -> tuple[float, ...]:
            return build_deformed(g, s).spectrum(self.config.solver, self.config.group_tol).values

        return self._run(evaluate, sample_points(s_from, s_to, steps), progress_callback)

    def sweep_hjoin(
        self,
        spec: HJoinSpec,
        s_from: float,
        s_to: float,
        steps: int,
        progress_callback: Callable[[int, int], None] | None = None,
    ) -> list[SweepRow]:
        """Sweep the H-join spectrum without assembling the graph.

        Raises:
            ParameterError: If s_from >= s_to or steps < 2
            StructureError: If the specification is invalid
        """
        validate_spec(spec)

        def evaluate(s: float) -> tuple[float, ...]:
            return hjoin_spectrum(spec, s, self.config.solver, self.config.group_tol).values

        return self._run(evaluate, sample_points(s_from, s_to, steps), progress_callback)

    def _run(
        self,
        evaluate: Evaluator,
        points: list[float],
        progress_callback: Callable[[int, int], None] | None,
    ) -> list[SweepRow]:
        total = len(points)
        workers = min(self.config.workers, total)

        if workers <= 1:
            rows = []
            for index, s in enumerate(points, start=1):
                rows.append(SweepRow(s=s, eigenvalues=evaluate(s)))
                if progress_callback:
                    progress_callback(index, total)
            check_rows(rows)
            return rows

        completed = 0
        rows = []

        logger.info(f"Starting {workers} worker threads for {total} sweep points")
        with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="SweepWorker") as executor:
            futures = {executor.submit(evaluate, s): s for s in points}
            for future in as_completed(futures):
                s = futures[future]
                rows.append(SweepRow(s=s, eigenvalues=future.result()))
                completed += 1
                if progress_callback:
                    progress_callback(completed, total)

        rows.sort(key=lambda row: row.s)
        check_rows(rows)
        return rows


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
