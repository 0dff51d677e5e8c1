"""CLI tooling for torusverlinde."""

from __future__ import annotations

__all__ = []
