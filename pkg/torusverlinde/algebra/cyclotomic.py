"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) and kept
reduced modulo the N-th cyclotomic polynomial, so two elements are equal iff
their coefficient tuples are equal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .polynomial import Polynomial, PolynomialError, invert_mod
from .rational import as_rational, format_fraction


class CyclotomicError(ArithmeticError):
    """Base error for cyclotomic field arithmetic."""


class FieldMismatchError(CyclotomicError):
    """Raised when two operands live in different cyclotomic fields."""


class AmbientFieldError(CyclotomicError):
    """Raised when a requested root of unity is not contained in the ambient field."""


class CyclotomicDivisionError(CyclotomicError, ZeroDivisionError):
    """Raised when inverting zero."""


def _proper_divisors(n: int) -> List[int]:
    return [d for d in range(1, n) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> Polynomial:
    """Phi_N by exact division of x^N - 1 by Phi_d over the proper divisors d of N."""

    if order < 1:
        raise CyclotomicError(f"Cyclotomic order must be positive, got {order}")
    result = Polynomial.monomial(order) - 1
    for divisor in _proper_divisors(order):
        result = result.exact_div(cyclotomic_polynomial(divisor))
    return result


def euler_phi(order: int) -> int:
    return cyclotomic_polynomial(order).degree


@lru_cache(maxsize=None)
def _reduction_table(order: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """(phi(N), nonzero (i, c_i) of Phi_N below the leading term); Phi_N is monic."""

    phi = cyclotomic_polynomial(order)
    terms = tuple((i, int(c)) for i, c in enumerate(phi.coeffs[:-1]) if c)
    return phi.degree, terms


def _common_denominator(values: Sequence[Fraction]) -> Tuple[List[int], int]:
    denominator = 1
    for value in values:
        if value.denominator != 1:
            denominator = denominator * value.denominator // math.gcd(denominator, value.denominator)
    return [value.numerator * (denominator // value.denominator) for value in values], denominator


def _reduce_integers(order: int, coeffs: List[int]) -> List[int]:
    degree, terms = _reduction_table(order)
    for k in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[k]
        if not c:
            continue
        base = k - degree
        for i, ci in terms:
            coeffs[base + i] -= c * ci
        coeffs[k] = 0
    if len(coeffs) < degree:
        coeffs = coeffs + [0] * (degree - len(coeffs))
    return coeffs[:degree]


def _reduce(order: int, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    numerators, denominator = _common_denominator(coeffs)
    return tuple(Fraction(c, denominator) for c in _reduce_integers(order, numerators))


@dataclass(frozen=True)
class CyclotomicNumber:
    """An element of Q(zeta_N) in the reduced power basis."""

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        expected = euler_phi(self.order)
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != expected:
            raise CyclotomicError(
                f"Q(zeta_{self.order}) elements need {expected} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_coefficients(cls, order: int, coeffs: Sequence[Any]) -> "CyclotomicNumber":
        """Build from an unreduced coefficient list of any length."""

        return cls(order, _reduce(order, [as_rational(c) for c in coeffs]))

    @classmethod
    def from_rational(cls, order: int, value: Any) -> "CyclotomicNumber":
        degree = euler_phi(order)
        coeffs = [Fraction(0)] * degree
        coeffs[0] = as_rational(value)
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 1)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_rational(self) -> Optional[Fraction]:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def embed(self) -> complex:
        """Evaluate the representative at exp(2*pi*i/N) in double precision."""

        total = complex(0.0, 0.0)
        for k, c in enumerate(self.coeffs):
            if c:
                total += float(c) * cmath.exp(2j * math.pi * k / self.order)
        return total

    def lift(self, order: int) -> "CyclotomicNumber":
        """The same number inside Q(zeta_order), via zeta_N = zeta_order^(order/N)."""

        if order < 1 or order % self.order:
            raise AmbientFieldError(f"Q(zeta_{self.order}) is not contained in Q(zeta_{order})")
        if order == self.order:
            return self
        constant = self.to_rational()
        if constant is not None:
            return CyclotomicNumber.from_rational(order, constant)
        step = order // self.order
        coeffs = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return CyclotomicNumber.from_coefficients(order, coeffs)

    def to_payload(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "coeffs": [format_fraction(c) for c in self.coeffs],
            "float": self.embed().real,
        }

    # ------------------------------------------------------------------
    # Field operations
    # ------------------------------------------------------------------
    def _check_field(self, other: "CyclotomicNumber") -> None:
        if other.order != self.order:
            raise FieldMismatchError(
                f"Cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
            )

    def __add__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            self._check_field(other)
            return CyclotomicNumber(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            coeffs = list(self.coeffs)
            coeffs[0] += other
            return CyclotomicNumber(self.order, tuple(coeffs))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, (CyclotomicNumber, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Any) -> "CyclotomicNumber":
        return (-self) + other

    def __mul__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            self._check_field(other)
            left, left_den = _common_denominator(self.coeffs)
            right, right_den = _common_denominator(other.coeffs)
            nonzero = [(j, b) for j, b in enumerate(right) if b]
            product = [0] * (2 * len(left) - 1)
            for i, a in enumerate(left):
                if not a:
                    continue
                for j, b in nonzero:
                    product[i + j] += a * b
            denominator = left_den * right_den
            reduced = _reduce_integers(self.order, product)
            return CyclotomicNumber(self.order, tuple(Fraction(c, denominator) for c in reduced))
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CyclotomicNumber(self.order, tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise CyclotomicDivisionError("Cannot invert zero in a cyclotomic field")
        constant = self.to_rational()
        if constant is not None:
            return CyclotomicNumber.from_rational(self.order, 1 / constant)
        try:
            inverse = invert_mod(Polynomial(self.coeffs), cyclotomic_polynomial(self.order))
        except PolynomialError as exc:  # pragma: no cover - Phi_N is irreducible
            raise CyclotomicError(str(exc)) from exc
        return CyclotomicNumber.from_coefficients(self.order, inverse.coeffs)

    def __truediv__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise CyclotomicDivisionError("Division by zero")
            return self * (1 / as_rational(other))
        return NotImplemented

    def __rtruediv__(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "CyclotomicNumber":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = CyclotomicNumber.one(self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(format_fraction(c) + ("*" + power if power else ""))
        return " + ".join(terms) if terms else "0"


def cyc_add(u: CyclotomicNumber, v: CyclotomicNumber) -> CyclotomicNumber:
    return u + v


def cyc_mul(u: CyclotomicNumber, v: CyclotomicNumber) -> CyclotomicNumber:
    return u * v


def cyc_neg(u: CyclotomicNumber) -> CyclotomicNumber:
    return -u


def cyc_inv(u: CyclotomicNumber) -> CyclotomicNumber:
    return u.inverse()


def to_rational(u: CyclotomicNumber) -> Optional[Fraction]:
    return u.to_rational()


def embed_float(u: CyclotomicNumber) -> complex:
    return u.embed()


@lru_cache(maxsize=None)
def root_of_unity(order: int, k: int) -> CyclotomicNumber:
    """zeta_N^k reduced into the power basis; k is taken modulo N."""

    if order < 1:
        raise CyclotomicError(f"Cyclotomic order must be positive, got {order}")
    k %= order
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return CyclotomicNumber.from_coefficients(order, coeffs)


def _check_ambient(n: int, ambient: int) -> int:
    if n < 1:
        raise AmbientFieldError(f"Angle denominator must be positive, got {n}")
    if ambient % (2 * n):
        raise AmbientFieldError(f"2*{n} does not divide the ambient order {ambient}")
    return ambient // (2 * n)


@lru_cache(maxsize=None)
def two_cos_pi_frac(a: int, n: int, ambient: int) -> CyclotomicNumber:
    """2cos(a*pi/n) = zeta_2n^a + zeta_2n^-a inside Q(zeta_ambient)."""

    step = _check_ambient(n, ambient)
    return root_of_unity(ambient, a * step) + root_of_unity(ambient, -a * step)


def cos_pi_frac(a: int, n: int, ambient: int) -> CyclotomicNumber:
    return two_cos_pi_frac(a, n, ambient) * Fraction(1, 2)


@lru_cache(maxsize=None)
def sin_sq_pi_frac(a: int, n: int, ambient: int) -> CyclotomicNumber:
    """sin^2(a*pi/n) = (1 - cos(2a*pi/n)) / 2."""

    return (1 - cos_pi_frac(2 * a, n, ambient)) * Fraction(1, 2)


@lru_cache(maxsize=None)
def csc_sq_pi_frac(a: int, n: int, ambient: int) -> CyclotomicNumber:
    """1/sin^2(a*pi/n), inverted in Q(zeta_2n) and lifted into Q(zeta_ambient)."""

    _check_ambient(n, ambient)
    return sin_sq_pi_frac(a, n, 2 * n).inverse().lift(ambient)


def evaluate_at_two_cos(poly: Polynomial, a: int, n: int, ambient: int) -> CyclotomicNumber:
    """poly(2cos(a*pi/n)) inside Q(zeta_ambient).

    Horner runs in Q[z]/(z^ambient - 1), where multiplying by
    zeta^s + zeta^-s is two rotations; Phi_ambient is applied once at the end.
    """

    shift = (a * _check_ambient(n, ambient)) % ambient
    acc: List[Fraction] = [Fraction(0)] * ambient
    for c in reversed(poly.coeffs):
        rotated = [Fraction(0)] * ambient
        for i, v in enumerate(acc):
            if v:
                rotated[(i + shift) % ambient] += v
                rotated[(i - shift) % ambient] += v
        rotated[0] += c
        acc = rotated
    return CyclotomicNumber.from_coefficients(ambient, acc)
