#!/usr/bin/env python3
"""
CSV persistence for parameter sweeps.

Header ``s,lambda_1,...,lambda_n``; one row per sampled s in ascending order,
numbers written with a fixed number of significant digits.
"""

import csv
import io
import logging
from pathlib import Path

from deformed_laplacian.domain.sweep import SweepRow, check_rows

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "sweep_csv_repository",
        "description": "CSV persistence for eigenvalue sweeps",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


def format_sweep_csv(rows: list[SweepRow], precision: int = 9) -> str:
    """Render rows as CSV text sorted by s.

    Args:
        rows: Sweep rows (any order)
        precision: Significant digits

    Returns:
        CSV text including the header
    """
    check_rows(rows)
    ordered = sorted(rows, key=lambda row: row.s)
    width = len(ordered[0].eigenvalues) if ordered else 0
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["s", *(f"lambda_{k}" for k in range(1, width + 1))])
    for row in ordered:
        writer.writerow([f"{value:.{precision}g}" for value in (row.s, *row.eigenvalues)])
    return buffer.getvalue()


class SweepCSVRepository:
    """Repository for sweep CSV files."""

    def __init__(self, csv_path: str | Path, precision: int = 9) -> None:
        """Initialize the repository.

        Args:
            csv_path: Path to the CSV file
            precision: Significant digits used when writing
        """
        self.csv_path = Path(csv_path)
        self.precision = precision

    def save(self, rows: list[SweepRow]) -> None:
        """Write rows sorted by s.

        Args:
            rows: Sweep rows
        """
        self.csv_path.parent.mkdir(parents=True, exist_ok=True)
        self.csv_path.write_text(format_sweep_csv(rows, self.precision), encoding="utf-8")
        logger.info(f"Wrote {len(rows)} sweep rows to {self.csv_path}")

    def load(self) -> list[SweepRow]:
        """Read rows back.

        Returns:
            Sweep rows in file order

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: If the header or a row is malformed
        """
        if not self.csv_path.exists():
            raise FileNotFoundError(f"CSV file not found: {self.csv_path}")

        rows: list[SweepRow] = []
        with open(self.csv_path, encoding="utf-8") as csvfile:
            reader = csv.reader(csvfile)
            header = next(reader, None)
            if not header or header[0] != "s":
                raise ValueError(f"CSV file missing 's' header column: {self.csv_path}")
            for line_number, record in enumerate(reader, start=2):
                if len(record) != len(header):
                    raise ValueError(f"line {line_number}: expected {len(header)} columns")
                values = [float(field) for field in record]
                rows.append(SweepRow(s=values[0], eigenvalues=tuple(values[1:])))
        return rows


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
