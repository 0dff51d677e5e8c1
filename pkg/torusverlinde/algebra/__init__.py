"""Exact arithmetic substrate: rationals, polynomials over Q, cyclotomic fields."""

from __future__ import annotations

from .cyclotomic import (
    AmbientFieldError,
    CyclotomicDivisionError,
    CyclotomicError,
    CyclotomicNumber,
    FieldMismatchError,
    cos_pi_frac,
    csc_sq_pi_frac,
    cyc_add,
    cyc_inv,
    cyc_mul,
    cyc_neg,
    cyclotomic_polynomial,
    embed_float,
    euler_phi,
    evaluate_at_two_cos,
    root_of_unity,
    sin_sq_pi_frac,
    to_rational,
    two_cos_pi_frac,
)
from .polynomial import Polynomial, PolynomialError, invert_mod
from .rational import Rational, as_rational, format_fraction, is_integer, parse_fraction, two_adic_exponent

__all__ = [
    "AmbientFieldError",
    "CyclotomicDivisionError",
    "CyclotomicError",
    "CyclotomicNumber",
    "FieldMismatchError",
    "Polynomial",
    "PolynomialError",
    "Rational",
    "as_rational",
    "cos_pi_frac",
    "csc_sq_pi_frac",
    "cyc_add",
    "cyc_inv",
    "cyc_mul",
    "cyc_neg",
    "cyclotomic_polynomial",
    "embed_float",
    "euler_phi",
    "evaluate_at_two_cos",
    "format_fraction",
    "invert_mod",
    "is_integer",
    "parse_fraction",
    "root_of_unity",
    "sin_sq_pi_frac",
    "to_rational",
    "two_adic_exponent",
    "two_cos_pi_frac",
]
