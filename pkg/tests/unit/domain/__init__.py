"""Unit tests for domain layer."""
