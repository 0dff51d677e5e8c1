"""Chebyshev polynomials (C_0 = 2 normalization) and the Chebyshev curve C_p(X) = C_q(Y)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Tuple

from torusverlinde.algebra import (
    CyclotomicNumber,
    Polynomial,
    PolynomialError,
    csc_sq_pi_frac,
    evaluate_at_two_cos,
    sin_sq_pi_frac,
    two_cos_pi_frac,
)

from .indices import ComponentIndex, GridIndex, iter_components, iter_grid, validate_pair


class CurveIncidenceError(ArithmeticError):
    """Raised when a computed point fails its defining equations exactly."""


@lru_cache(maxsize=None)
def chebyshev_first(k: int) -> Polynomial:
    """C_k with C_0 = 2, C_1 = z, C_{k+1} = z C_k - C_{k-1}; C_{-k} = C_k."""

    k = abs(k)
    if k == 0:
        return Polynomial.constant(2)
    if k == 1:
        return Polynomial.x()
    return Polynomial.x() * chebyshev_first(k - 1) - chebyshev_first(k - 2)


@lru_cache(maxsize=None)
def chebyshev_second(k: int) -> Polynomial:
    """S_k with S_0 = 1, S_1 = z and the same recurrence."""

    if k < 0:
        raise PolynomialError(f"Second-kind Chebyshev index must be non-negative, got {k}")
    if k == 0:
        return Polynomial.one()
    if k == 1:
        return Polynomial.x()
    return Polynomial.x() * chebyshev_second(k - 1) - chebyshev_second(k - 2)


def poly_eval(poly: Polynomial, z: Any) -> Any:
    return poly.evaluate(z)


def poly_derivative(poly: Polynomial) -> Polynomial:
    return poly.derivative()


def compose(outer: Polynomial, inner: Polynomial) -> Polynomial:
    return outer.compose(inner)


@dataclass(frozen=True)
class BivariatePolynomial:
    """Dense coefficient matrix: ``coeffs[i][j]`` multiplies X^i Y^j."""

    coeffs: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def separable(cls, in_x: Polynomial, in_y: Polynomial) -> "BivariatePolynomial":
        """in_x(X) + in_y(Y)."""

        rows = max(len(in_x.coeffs), 1)
        cols = max(len(in_y.coeffs), 1)
        matrix = [[Fraction(0)] * cols for _ in range(rows)]
        for i, c in enumerate(in_x.coeffs):
            matrix[i][0] += c
        for j, c in enumerate(in_y.coeffs):
            matrix[0][j] += c
        return cls(tuple(tuple(row) for row in matrix))

    @property
    def degree_x(self) -> int:
        nonzero = [i for i, row in enumerate(self.coeffs) if any(row)]
        return nonzero[-1] if nonzero else -1

    @property
    def degree_y(self) -> int:
        nonzero = [j for row in self.coeffs for j, c in enumerate(row) if c]
        return max(nonzero) if nonzero else -1

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coeffs)

    def partial_x(self) -> "BivariatePolynomial":
        rows = [tuple(i * c for c in row) for i, row in enumerate(self.coeffs) if i]
        return BivariatePolynomial(tuple(rows) or ((Fraction(0),),))

    def partial_y(self) -> "BivariatePolynomial":
        rows = [tuple(j * c for j, c in enumerate(row) if j) or (Fraction(0),) for row in self.coeffs]
        return BivariatePolynomial(tuple(rows))

    def split(self) -> Tuple[Polynomial, Polynomial]:
        """(in_x, in_y) with self = in_x(X) + in_y(Y); the constant term goes to in_x."""

        for i, row in enumerate(self.coeffs):
            if i and any(row[1:]):
                raise PolynomialError("Polynomial has mixed X^i Y^j terms")
        in_x = Polynomial(tuple(row[0] for row in self.coeffs))
        in_y = Polynomial((Fraction(0),) + tuple(self.coeffs[0][1:]))
        return in_x, in_y

    def evaluate(self, x: Any, y: Any) -> Any:
        """Nested Horner evaluation in the arithmetic of x and y."""

        inner = [Polynomial(row).evaluate(y) for row in self.coeffs]
        result = 0 * x + inner[-1]
        for value in reversed(inner[:-1]):
            result = result * x + value
        return result


@dataclass(frozen=True)
class CurvePolynomials:
    """F = C_p(X) - C_q(Y) with its first and second partial derivatives."""

    p: int
    q: int
    F: BivariatePolynomial
    FX: BivariatePolynomial
    FY: BivariatePolynomial
    FXX: BivariatePolynomial
    FYY: BivariatePolynomial
    FXY: BivariatePolynomial


@lru_cache(maxsize=None)
def curve_polynomials(p: int, q: int) -> CurvePolynomials:
    validate_pair(p, q)
    if p < 0 or q < 0:
        p, q = abs(p), abs(q)
    F = BivariatePolynomial.separable(chebyshev_first(p), -chebyshev_first(q))
    FX = F.partial_x()
    FY = F.partial_y()
    return CurvePolynomials(
        p=p,
        q=q,
        F=F,
        FX=FX,
        FY=FY,
        FXX=FX.partial_x(),
        FYY=FY.partial_y(),
        FXY=FX.partial_y(),
    )


@dataclass(frozen=True)
class CurvePoint:
    """A distinguished point (2cos(a*pi/p), 2cos(b*pi/q)) of the curve or its critical set."""

    index: GridIndex | ComponentIndex
    exact: Tuple[CyclotomicNumber, CyclotomicNumber]

    @property
    def approx(self) -> Tuple[float, float]:
        return (self.exact[0].embed().real, self.exact[1].embed().real)


def _point(p: int, q: int, a: int, b: int) -> Tuple[CyclotomicNumber, CyclotomicNumber]:
    ambient = 2 * p * q
    return two_cos_pi_frac(a, p, ambient), two_cos_pi_frac(b, q, ambient)


def evaluate_at_grid(poly: BivariatePolynomial, p: int, q: int, a: int, b: int) -> CyclotomicNumber:
    """poly(2cos(a*pi/p), 2cos(b*pi/q)) in Q(zeta_2pq) for a separable poly."""

    in_x, in_y = poly.split()
    ambient = 2 * p * q
    return evaluate_at_two_cos(in_x, a, p, ambient) + evaluate_at_two_cos(in_y, b, q, ambient)


def critical_points(p: int, q: int) -> List[CurvePoint]:
    """Common zeros of F_X and F_Y: all (p-1)(q-1) grid points, verified exactly."""

    curve = curve_polynomials(p, q)
    points: List[CurvePoint] = []
    for index in iter_grid(curve.p, curve.q):
        values = [evaluate_at_grid(poly, curve.p, curve.q, index.a, index.b) for poly in (curve.FX, curve.FY)]
        if not all(value.is_zero() for value in values):
            raise CurveIncidenceError(f"Grid point {tuple(index)} is not critical")
        points.append(CurvePoint(index=index, exact=_point(curve.p, curve.q, index.a, index.b)))
    return points


def singular_points(p: int, q: int) -> List[CurvePoint]:
    """The (p-1)(q-1)/2 nodes of the curve; each satisfies F = F_X = F_Y = 0 exactly."""

    curve = curve_polynomials(p, q)
    points: List[CurvePoint] = []
    for index in iter_components(curve.p, curve.q):
        values = [
            evaluate_at_grid(poly, curve.p, curve.q, index.a, index.b) for poly in (curve.F, curve.FX, curve.FY)
        ]
        if not all(value.is_zero() for value in values):
            raise CurveIncidenceError(f"Component point {tuple(index)} is not a node")
        points.append(CurvePoint(index=index, exact=_point(curve.p, curve.q, index.a, index.b)))
    return points


def incidence_polynomial(p: int, q: int) -> Polynomial:
    """F_X(C_q(t), C_p(t)) C_q'(t) + F_Y(C_q(t), C_p(t)) C_p'(t); identically zero."""

    curve = curve_polynomials(p, q)
    cq, cp = chebyshev_first(curve.q), chebyshev_first(curve.p)
    fx = curve.FX.evaluate(cq, cp)
    fy = curve.FY.evaluate(cq, cp)
    return fx * cq.derivative() + fy * cp.derivative()


@lru_cache(maxsize=None)
def _second_kind_at(degree: int, i: int, n: int) -> CyclotomicNumber:
    return evaluate_at_two_cos(chebyshev_second(degree), i, n, 2 * n)


@lru_cache(maxsize=None)
def sine_power_sum(n: int, exponent: int, indices: Tuple[int, ...], degrees: Tuple[int, ...] = ()) -> CyclotomicNumber:
    """Sum over i in ``indices`` of csc^(2*exponent)(i*pi/n) * prod_k S_k(2cos(i*pi/n)), in Q(zeta_2n).

    A negative exponent takes powers of sin^2 directly.
    """

    order = 2 * n
    total = CyclotomicNumber.zero(order)
    for i in indices:
        if exponent >= 0:
            term = csc_sq_pi_frac(i, n, order) ** exponent
        else:
            term = sin_sq_pi_frac(i, n, order) ** (-exponent)
        for degree in degrees:
            term = term * _second_kind_at(degree, i, n)
        total = total + term
    return total
