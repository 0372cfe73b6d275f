"""Unit tests for deformed-laplacian."""
