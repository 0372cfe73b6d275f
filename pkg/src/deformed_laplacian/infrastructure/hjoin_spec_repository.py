#!/usr/bin/env python3
"""
Repository for H-join specifications stored as JSON.

Document layout::

    {"h": {"n": 3, "edges": [[0, 1], [1, 2]]},
     "components": [{"family": "cycle", "n": 4},
                    {"family": "path", "n": 2},
                    {"family": "cycle", "n": 6}]}

An optional top-level ``"schema"`` field is checked when present.
"""

import json
import logging
from pathlib import Path

from deformed_laplacian.domain.errors import ParameterError, SpecParseError
from deformed_laplacian.domain.hjoin import HJoinSpec

__version__ = "0.1.0"
__author__ = "John Ayers"

logger = logging.getLogger(__name__)


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "hjoin_spec_repository",
        "description": "Repository for H-join specification files",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }


class HJoinSpecRepository:
    """Repository for loading and saving H-join specifications."""

    SUPPORTED_SCHEMA_VERSIONS = [1]

    def __init__(self, file_path: str | Path) -> None:
        """Initialize the repository.

        Args:
            file_path: Path to the JSON document
        """
        self.file_path = Path(file_path)

    def load(self) -> HJoinSpec:
        """Load the specification.

        Returns:
            HJoinSpec instance

        Raises:
            FileNotFoundError: If the file doesn't exist
            SpecParseError: If the JSON is invalid or does not describe an H-join
        """
        if not self.file_path.exists():
            raise FileNotFoundError(f"H-join spec not found: {self.file_path}")

        try:
            with open(self.file_path, encoding="utf-8") as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            raise SpecParseError(
                f"{self.file_path}: invalid JSON at line {e.lineno}: {e.msg}"
            ) from e

        if not isinstance(document, dict):
            raise SpecParseError(f"{self.file_path}: top level must be an object")

        schema = document.get("schema", 1)
        if schema not in self.SUPPORTED_SCHEMA_VERSIONS:
            raise SpecParseError(
                f"Unsupported schema version: {schema}. "
                f"Supported versions: {self.SUPPORTED_SCHEMA_VERSIONS}"
            )

        try:
            spec = HJoinSpec.from_dict(document)
        except (ParameterError, ValueError, TypeError) as e:
            raise SpecParseError(f"{self.file_path}: {e}") from e

        logger.debug(f"Loaded H-join spec {self.file_path} (r={spec.r})")
        return spec

    def save(self, spec: HJoinSpec) -> None:
        """Save the specification atomically.

        Args:
            spec: Specification to store
        """
        document = {"schema": 1, **spec.to_dict()}
        self.file_path.parent.mkdir(parents=True, exist_ok=True)

        # Write atomically (temp file + rename)
        temp_file = self.file_path.with_suffix(".tmp")
        try:
            with open(temp_file, "w", encoding="utf-8") as f:
                json.dump(document, f, indent=2)
            temp_file.replace(self.file_path)
        except Exception:
            if temp_file.exists():
                temp_file.unlink()
            raise


if __name__ == "__main__":
    # Example usage
    info = file_info()
    print(f"{info['name']} v{info['version']}")
