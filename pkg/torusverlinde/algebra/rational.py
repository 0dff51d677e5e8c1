"""Rational helpers shared by every exact computation."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction into a Fraction; floats are rejected."""

    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"Expected an int or Fraction, got {type(value).__name__}")
    return Fraction(value)


def format_fraction(value: RationalLike) -> str:
    """Serialize as "num/den", omitting the denominator when it is 1."""

    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """Inverse of :func:`format_fraction`; decimal strings are not accepted."""

    stripped = text.strip()
    if not stripped or "." in stripped or "e" in stripped.lower():
        raise ValueError(f"Invalid fraction string: {text!r}")
    return Fraction(stripped)


def is_integer(value: RationalLike) -> bool:
    return as_rational(value).denominator == 1


def two_adic_exponent(value: RationalLike) -> int:
    """Return k such that the denominator of ``value`` is 2**k times an odd number."""

    denominator = as_rational(value).denominator
    exponent = 0
    while denominator % 2 == 0:
        denominator //= 2
        exponent += 1
    return exponent
