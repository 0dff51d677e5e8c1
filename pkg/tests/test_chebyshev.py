"""Chebyshev polynomials and the curve C_p(X) = C_q(Y)."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import List

import pytest
import sympy

from torusverlinde.algebra import Polynomial, PolynomialError, root_of_unity, two_cos_pi_frac
from torusverlinde.knots import (
    KnotValidationError,
    chebyshev_first,
    chebyshev_second,
    critical_points,
    curve_polynomials,
    evaluate_at_grid,
    incidence_polynomial,
    sine_power_sum,
    singular_points,
)
from torusverlinde.knots.chebyshev import BivariatePolynomial, compose, poly_derivative, poly_eval

X = sympy.Symbol("x")
Z = Polynomial.x()


def sympy_coeffs(expr: sympy.Expr) -> List[Fraction]:
    poly = sympy.Poly(sympy.expand(expr), X)
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


@pytest.mark.parametrize("k", range(0, 16))
def test_first_kind_matches_sympy(k: int) -> None:
    assert list(chebyshev_first(k).coeffs) == sympy_coeffs(2 * sympy.chebyshevt(k, X / 2))


@pytest.mark.parametrize("k", range(0, 16))
def test_second_kind_matches_sympy(k: int) -> None:
    assert list(chebyshev_second(k).coeffs) == sympy_coeffs(sympy.chebyshevu(k, X / 2))


def test_small_examples() -> None:
    assert chebyshev_first(0) == Polynomial.constant(2)
    assert chebyshev_first(1) == Z
    assert chebyshev_first(3) == Z ** 3 - 3 * Z
    assert chebyshev_second(0) == Polynomial.one()
    assert chebyshev_second(2) == Z * Z - 1


def test_negative_indices() -> None:
    assert chebyshev_first(-4) == chebyshev_first(4)
    with pytest.raises(PolynomialError):
        chebyshev_second(-1)


def test_poly_eval_in_each_arithmetic() -> None:
    assert poly_eval(chebyshev_first(2), 2) == 2
    assert poly_eval(chebyshev_first(3), Fraction(1)) == -2
    assert poly_eval(chebyshev_first(5), 0) == 0
    assert math.isclose(poly_eval(chebyshev_first(3), 2 * math.cos(0.3)), 2 * math.cos(0.9), abs_tol=1e-12)


def test_poly_derivative() -> None:
    assert poly_derivative(chebyshev_first(3)) == chebyshev_second(2).scale(3)
    assert poly_derivative(Polynomial.constant(7)).is_zero()


@pytest.mark.parametrize("k", range(1, 31))
def test_derivative_identities(k: int) -> None:
    c_k, s_prev = chebyshev_first(k), chebyshev_second(k - 1)

    assert c_k.derivative() == s_prev.scale(k)
    assert (Z * Z - 4) * s_prev.derivative() == c_k.scale(k) - Z * s_prev


@pytest.mark.parametrize("k,l", [(k, l) for k in range(1, 31) for l in range(1, 31) if k * l <= 64])
def test_composition_identity(k: int, l: int) -> None:
    assert compose(chebyshev_first(k), chebyshev_first(l)) == chebyshev_first(k * l)


def test_values_at_roots_of_unity() -> None:
    rng = random.Random(3)
    for _ in range(25):
        order = rng.choice([5, 7, 12, 20, 30])
        k = rng.randint(0, 14)
        zeta, zeta_inv = root_of_unity(order, 1), root_of_unity(order, -1)
        z = zeta + zeta_inv

        assert chebyshev_first(k).evaluate(z) == root_of_unity(order, k) + root_of_unity(order, -k)
        assert chebyshev_second(k).evaluate(z) * (zeta - zeta_inv) == (
            root_of_unity(order, k + 1) - root_of_unity(order, -(k + 1))
        )


def test_trefoil_curve_polynomials() -> None:
    curve = curve_polynomials(2, 3)

    assert curve.F.degree_x == 2
    assert curve.F.degree_y == 3
    assert curve.FXY.is_zero()
    assert curve.F.evaluate(Fraction(0), Fraction(1)) == 0
    assert curve.F.evaluate(Fraction(3), Fraction(0)) == 7
    assert curve.FX.evaluate(Fraction(3), Fraction(5)) == 6
    assert curve.FY.evaluate(Fraction(0), Fraction(2)) == -9
    assert curve.FXX.evaluate(Fraction(1), Fraction(1)) == 2
    assert curve.FYY.evaluate(Fraction(0), Fraction(1)) == -6


def test_curve_rejects_invalid_pairs() -> None:
    with pytest.raises(KnotValidationError):
        curve_polynomials(4, 6)
    with pytest.raises(KnotValidationError):
        curve_polynomials(1, 5)


def test_trefoil_points() -> None:
    critical = critical_points(2, 3)
    nodes = singular_points(2, 3)

    assert [tuple(point.index) for point in critical] == [(1, 1), (1, 2)]
    coordinates = [value for point in critical for value in point.approx]
    assert coordinates == pytest.approx([0.0, 1.0, 0.0, -1.0], abs=1e-12)
    assert len(nodes) == 1
    assert nodes[0].exact[0].to_rational() == 0
    assert nodes[0].exact[1].to_rational() == 1


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 7), (5, 6)])
def test_point_counts_and_containment(p: int, q: int) -> None:
    critical = critical_points(p, q)
    nodes = singular_points(p, q)

    assert len(critical) == (p - 1) * (q - 1)
    assert len(nodes) == (p - 1) * (q - 1) // 2
    critical_indices = {tuple(point.index) for point in critical}
    assert all(tuple(point.index) in critical_indices for point in nodes)
    assert all((point.index.a - point.index.b) % 2 == 0 for point in nodes)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)])
def test_incidence_polynomial_vanishes(p: int, q: int) -> None:
    assert incidence_polynomial(p, q).is_zero()


def test_split_separates_the_variables() -> None:
    curve = curve_polynomials(3, 4)
    in_x, in_y = curve.F.split()

    assert in_x == chebyshev_first(3) - 2
    assert in_y == -chebyshev_first(4) + 2
    with pytest.raises(PolynomialError):
        BivariatePolynomial(((Fraction(0), Fraction(0)), (Fraction(0), Fraction(1)))).split()


@pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (3, 5)])
def test_grid_evaluation_matches_nested_horner(p: int, q: int) -> None:
    curve = curve_polynomials(p, q)
    ambient = 2 * p * q
    for a in range(1, p):
        for b in range(1, q):
            x, y = two_cos_pi_frac(a, p, ambient), two_cos_pi_frac(b, q, ambient)
            for poly in (curve.F, curve.FX, curve.FY, curve.FXX, curve.FYY):
                assert evaluate_at_grid(poly, p, q, a, b) == poly.evaluate(x, y)


def test_sine_power_sums() -> None:
    assert sine_power_sum(5, 0, (1, 2, 3, 4)).to_rational() == 4
    assert sine_power_sum(5, -1, (1, 2, 3, 4)).to_rational() == Fraction(5, 2)
    assert sine_power_sum(3, 1, (1, 2)).to_rational() == Fraction(8, 3)
    assert sine_power_sum(4, 0, (1, 2, 3), (1,)).to_rational() == 0
