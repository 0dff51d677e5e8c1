"""Exact torus-knot invariants: character varieties, adjoint torsions, Verlinde numbers."""

from __future__ import annotations

__all__ = ["__version__"]

__version__ = "0.1.0"
