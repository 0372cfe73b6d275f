#!/usr/bin/env python3
"""
deformed-laplacian: spectra of the deformed Laplacian matrix of graphs.

This package builds M_G(s) = I - sA + s^2(D - I) for simple undirected graphs,
locates eigenvalues of trees through an inertia-preserving diagonalization,
synthesizes spectra of H-join graphs from component data, and checks the
known bounds, monotonicity and cospectrality properties against a dense
eigensolver.
"""

__version__ = "0.1.0"
__author__ = "John Ayers"


def file_info() -> dict[str, str]:
    """Return metadata about this module.

    Returns:
        Dictionary containing module metadata
    """
    return {
        "name": "__init__",
        "description": "Package initialization for deformed-laplacian",
        "version": __version__,
        "author": __author__,
        "last_updated": "2026-10-17",
    }
