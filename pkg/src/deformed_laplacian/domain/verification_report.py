#!/usr/bin/env python3
"""
Verification report domain model.

Collects per-suite counts, worst-case deviations and reproducible failure
details from a property verification run.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any

__version__ = "0.1.0"
__author__ = "John Ayers"

SCHEMA_VERSION = 1


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "verification_report",
        "description": "Summary report for property verification runs",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


@dataclass
class FailureDetail:
    """One failing (or noteworthy) instance.

    Attributes:
        instance: Reproduction data (graph edges, s, λ, seed, ...)
        message: What went wrong
    """

    instance: str
    message: str

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization.

        Returns:
            Dictionary representation
        """
        return {"instance": self.instance, "message": self.message}


@dataclass
class SuiteResult:
    """Outcome of one property suite.

    Attributes:
        name: Suite name
        trials: Number of checked instances
        passed: Instances that satisfied the property
        failed: Instances that violated an asserted property
        findings: Instances worth reporting that are not failures
        worst_deviation: Largest numeric deviation observed
        failures: Failure details for reproduction
        notes: Findings details
    """

    name: str
    trials: int = 0
    passed: int = 0
    failed: int = 0
    findings: int = 0
    worst_deviation: float = 0.0
    failures: list[FailureDetail] = field(default_factory=list)
    notes: list[FailureDetail] = field(default_factory=list)

    def record(
        self, ok: bool, deviation: float = 0.0, instance: str = "", message: str = ""
    ) -> None:
        """Record one trial.

        Args:
            ok: Whether the property held
            deviation: Numeric deviation observed for this trial
            instance: Reproduction data, kept on failure
            message: Failure description
        """
        self.trials += 1
        self.worst_deviation = max(self.worst_deviation, deviation)
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(FailureDetail(instance, message))

    def note(self, instance: str, message: str) -> None:
        """Record a finding that does not count as a failure."""
        self.findings += 1
        self.notes.append(FailureDetail(instance, message))

    def merge(self, other: "SuiteResult") -> None:
        """Fold another partial result for the same suite into this one."""
        self.trials += other.trials
        self.passed += other.passed
        self.failed += other.failed
        self.findings += other.findings
        self.worst_deviation = max(self.worst_deviation, other.worst_deviation)
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        """True if no trial failed."""
        return self.failed == 0

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization.

        Returns:
            Dictionary representation
        """
        return {
            "name": self.name,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "findings": self.findings,
            "worst_deviation": self.worst_deviation,
            "failures": [f.to_dict() for f in self.failures],
            "notes": [f.to_dict() for f in self.notes],
        }


@dataclass
class VerificationReport:
    """Summary of a verification run.

    Attributes:
        source: What was verified (file name or "random")
        seed: Random seed, if any
        start_time: When the run started
        end_time: When the run ended
        suites: Results per suite
    """

    source: str
    seed: int | None
    start_time: datetime
    end_time: datetime
    suites: list[SuiteResult] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Validate report data."""
        if self.end_time < self.start_time:
            raise ValueError("end_time cannot be before start_time")

    @property
    def duration_seconds(self) -> float:
        """Wall-clock duration."""
        return (self.end_time - self.start_time).total_seconds()

    @property
    def ok(self) -> bool:
        """True if every suite passed."""
        return all(suite.ok for suite in self.suites)

    @property
    def total_failures(self) -> int:
        """Failed trials across all suites."""
        return sum(suite.failed for suite in self.suites)

    def suite(self, name: str) -> SuiteResult | None:
        """Look up a suite by name."""
        return next((suite for suite in self.suites if suite.name == name), None)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization.

        Returns:
            Dictionary representation
        """
        return {
            "schema": SCHEMA_VERSION,
            "source": self.source,
            "seed": self.seed,
            "ok": self.ok,
            "duration_seconds": round(self.duration_seconds, 3),
            "start_time": self.start_time.isoformat(),
            "end_time": self.end_time.isoformat(),
            "suites": [suite.to_dict() for suite in self.suites],
        }

    def to_json(self, indent: int = 2) -> str:
        """Convert to JSON string.

        Args:
            indent: Number of spaces for indentation (default: 2)

        Returns:
            JSON string representation
        """
        return json.dumps(self.to_dict(), indent=indent)

    def save_to_file(self, file_path: str | Path) -> None:
        """Save the report to a JSON file.

        Args:
            file_path: Path to save the JSON file
        """
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json())

    def format_console_summary(self) -> str:
        """Format summary for console display.

        Returns:
            Formatted multi-line summary string
        """
        lines = [
            "=" * 60,
            "VERIFICATION SUMMARY",
            "=" * 60,
            f"Source:           {self.source}",
            f"Seed:             {self.seed if self.seed is not None else 'n/a'}",
            f"Duration:         {self.duration_seconds:.2f}s",
            "",
            f"{'Suite':<26}{'trials':>8}{'pass':>8}{'fail':>6}{'notes':>6}  worst",
            "-" * 60,
        ]
        for suite in self.suites:
            lines.append(
                f"{suite.name:<26}{suite.trials:>8}{suite.passed:>8}{suite.failed:>6}"
                f"{suite.findings:>6}  {suite.worst_deviation:.3e}"
            )

        for suite in self.suites:
            for note in suite.notes:
                lines.append(f"FINDING [{suite.name}] {note.message} :: {note.instance}")
        if self.total_failures:
            lines.extend(["", f"FAILURES ({self.total_failures}):", "-" * 60])
            for suite in self.suites:
                for i, failure in enumerate(suite.failures, 1):
                    lines.append(f"{i}. [{suite.name}] {failure.message}")
                    lines.append(f"   Instance: {failure.instance}")

        lines.append("=" * 60)
        lines.append("RESULT: PASS" if self.ok else "RESULT: FAIL")
        return "\n".join(lines)


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
