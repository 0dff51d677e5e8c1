"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple, Union

from .rational import as_rational

Scalar = Union[int, Fraction]


class PolynomialError(ValueError):
    """Raised for invalid polynomial operations (e.g. division by zero polynomial)."""


def _strip(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial with Fraction coefficients in ascending degree.

    The coefficient tuple never carries trailing zeros, so structural equality
    is polynomial equality and the zero polynomial is the empty tuple.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        normalized = _strip([as_rational(c) for c in self.coeffs])
        object.__setattr__(self, "coeffs", normalized)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((as_rational(value),))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "Polynomial":
        if degree < 0:
            raise PolynomialError("Monomial degree must be non-negative")
        return cls(tuple([Fraction(0)] * degree + [as_rational(value)]))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((Fraction(1),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((Fraction(0), Fraction(1)))

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""

        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    def _coerce(self, other: Any) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: Any) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self.coeffs), len(rhs.coeffs))
        return Polynomial(tuple(self.coefficient(i) + rhs.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "Polynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return Polynomial.zero()
        product: List[Fraction] = [Fraction(0)] * (len(self.coeffs) + len(rhs.coeffs) - 1)
        for i, left in enumerate(self.coeffs):
            if not left:
                continue
            for j, right in enumerate(rhs.coeffs):
                if right:
                    product[i + j] += left * right
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise PolynomialError("Polynomials only support non-negative powers")
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = as_rational(factor)
        return Polynomial(tuple(c * factor for c in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Euclidean division over Q."""

        if divisor.is_zero():
            raise PolynomialError("Division by the zero polynomial")
        remainder = list(self.coeffs)
        shift = len(remainder) - len(divisor.coeffs)
        if shift < 0:
            return Polynomial.zero(), self
        quotient = [Fraction(0)] * (shift + 1)
        lead = divisor.leading
        top = divisor.degree
        for k in range(shift, -1, -1):
            coeff = remainder[k + top]
            if not coeff:
                continue
            factor = coeff / lead
            quotient[k] = factor
            for i, d in enumerate(divisor.coeffs):
                if d:
                    remainder[k + i] -= factor * d
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder[:top]))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero():
            raise PolynomialError("Polynomial division left a non-zero remainder")
        return quotient

    def __call__(self, z: Any) -> Any:
        return self.evaluate(z)

    def evaluate(self, z: Any) -> Any:
        """Horner evaluation in the arithmetic of ``z``.

        ``z`` may be a Fraction, int, float, complex, CyclotomicNumber or
        another Polynomial (which yields the composition).
        """

        if not self.coeffs:
            return 0 * z
        result = 0 * z + self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * z + c
        return result

    def compose(self, inner: "Polynomial") -> "Polynomial":
        composed = self.evaluate(inner)
        if not isinstance(composed, Polynomial):
            composed = Polynomial.constant(composed)
        return composed

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: List[str] = []
        for degree in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[degree]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                power = "z" if degree == 1 else f"z^{degree}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def invert_mod(value: Polynomial, modulus: Polynomial) -> Polynomial:
    """Return s with value*s == 1 modulo ``modulus`` (extended Euclid over Q).

    Only the Bezout coefficient of ``value`` is tracked. Remainders are
    kept monic.
    """

    if modulus.degree < 1:
        raise PolynomialError("Modulus must have positive degree")
    r0, r1 = modulus, value.divmod(modulus)[1]
    if r1.is_zero():
        raise PolynomialError("Value is not invertible modulo the given polynomial")
    s0, s1 = Polynomial.zero(), Polynomial.constant(1 / r1.leading)
    r1 = r1.scale(1 / r1.leading)
    while not r1.is_zero():
        quotient, remainder = r0.divmod(r1)
        s_next = s0 - quotient * s1
        if not remainder.is_zero():
            lead = remainder.leading
            remainder = remainder.scale(1 / lead)
            s_next = s_next.scale(1 / lead)
        r0, r1 = r1, remainder
        s0, s1 = s1, s_next
    if r0.degree != 0:
        raise PolynomialError("Value and modulus share a non-trivial factor")
    return s0.divmod(modulus)[1]
