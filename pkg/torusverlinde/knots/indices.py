"""Knot parameter validation and the (a, b) index grids."""

from __future__ import annotations

from math import gcd
from typing import Iterator, List, NamedTuple


class KnotValidationError(ValueError):
    """Raised when (p, q) do not describe a torus knot."""


class GridIndexError(ValueError):
    """Raised when an (a, b) label falls outside 0<a<p, 0<b<q (or breaks parity)."""


class GridIndex(NamedTuple):
    """Label (a, b) with 0 < a < p and 0 < b < q."""

    a: int
    b: int


class ComponentIndex(NamedTuple):
    """Grid label with a = b (mod 2); indexes one irreducible component."""

    a: int
    b: int


def pair_violations(p: int, q: int) -> List[str]:
    violations: List[str] = []
    if abs(p) < 2:
        violations.append(f"|p| must be at least 2 (got p={p})")
    if abs(q) < 2:
        violations.append(f"|q| must be at least 2 (got q={q})")
    if gcd(p, q) != 1:
        violations.append(f"p and q must be coprime (gcd({p}, {q}) = {gcd(p, q)})")
    return violations


def validate_pair(p: int, q: int) -> None:
    violations = pair_violations(p, q)
    if violations:
        raise KnotValidationError("; ".join(violations))


def iter_grid(p: int, q: int) -> Iterator[GridIndex]:
    """All grid labels in lexicographic order."""

    for a in range(1, p):
        for b in range(1, q):
            yield GridIndex(a, b)


def iter_components(p: int, q: int) -> Iterator[ComponentIndex]:
    for a, b in iter_grid(p, q):
        if (a - b) % 2 == 0:
            yield ComponentIndex(a, b)


def check_grid_index(p: int, q: int, a: int, b: int) -> GridIndex:
    if not (0 < a < p and 0 < b < q):
        raise GridIndexError(f"Label ({a},{b}) is outside the grid 0<a<{p}, 0<b<{q}")
    return GridIndex(a, b)


def check_component_index(p: int, q: int, a: int, b: int) -> ComponentIndex:
    check_grid_index(p, q, a, b)
    if (a - b) % 2:
        raise GridIndexError(f"Label ({a},{b}) breaks the parity condition a = b (mod 2)")
    return ComponentIndex(a, b)
