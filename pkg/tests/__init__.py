"""Test suite for deformed-laplacian."""
