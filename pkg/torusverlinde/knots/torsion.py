"""Adjoint Reidemeister torsion on the irreducible components of T(p, q)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from torusverlinde.algebra import CyclotomicNumber, csc_sq_pi_frac, format_fraction

from .charvar import TorusKnot, components
from .chebyshev import CurveIncidenceError, curve_polynomials, evaluate_at_grid, sine_power_sum
from .indices import ComponentIndex
from .smatrix import s_matrix

FLOAT_MATCH_TOLERANCE = 1e-10
RELATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class TorsionValue:
    component: ComponentIndex
    exact: CyclotomicNumber
    float: float

    @classmethod
    def of(cls, component: ComponentIndex, exact: CyclotomicNumber) -> "TorsionValue":
        return cls(component=component, exact=exact, float=exact.embed().real)

    def is_positive(self) -> bool:
        embedded = self.exact.embed()
        return abs(embedded.imag) <= FLOAT_MATCH_TOLERANCE and embedded.real > 0


def _csc_sq_product(knot: TorusKnot, component: ComponentIndex) -> CyclotomicNumber:
    a, b = component
    order = knot.field_order
    return csc_sq_pi_frac(a, knot.p, order) * csc_sq_pi_frac(b, knot.q, order)


@lru_cache(maxsize=None)
def adjoint_torsion(knot: TorusKnot, component: ComponentIndex) -> TorsionValue:
    """tau = pq / (16 sin^2(a*pi/p) sin^2(b*pi/q))."""

    exact = _csc_sq_product(knot, component) * Fraction(knot.p * knot.q, 16)
    return TorsionValue.of(component, exact)


def hessian_at(knot: TorusKnot, component: ComponentIndex) -> CyclotomicNumber:
    """det of the second partials of F at the node, by direct polynomial evaluation."""

    curve = curve_polynomials(knot.p, knot.q)
    if not curve.FXY.is_zero():
        raise CurveIncidenceError("F_XY must vanish for a separable curve")
    a, b = component
    fxx = evaluate_at_grid(curve.FXX, knot.p, knot.q, a, b)
    fyy = evaluate_at_grid(curve.FYY, knot.p, knot.q, a, b)
    return fxx * fyy


def hessian_closed_form(knot: TorusKnot, component: ComponentIndex) -> CyclotomicNumber:
    """-p^2 q^2 / (4 sin^2(a*pi/p) sin^2(b*pi/q))."""

    return _csc_sq_product(knot, component) * Fraction(-((knot.p * knot.q) ** 2), 4)


def torsion_from_hessian(knot: TorusKnot, component: ComponentIndex) -> TorsionValue:
    exact = hessian_at(knot, component) * Fraction(-1, 4 * knot.p * knot.q)
    return TorsionValue.of(component, exact)


@dataclass(frozen=True)
class PowerSum:
    """Sum over components of (2 tau)^(g-1) with its rationality verdict."""

    g: int
    value: CyclotomicNumber

    @property
    def rational(self) -> Optional[Fraction]:
        return self.value.to_rational()

    @property
    def is_integer(self) -> bool:
        rational = self.rational
        return rational is not None and rational.denominator == 1

    def display(self) -> str:
        rational = self.rational
        return format_fraction(rational) if rational is not None else str(self.value)


def torsion_power_sum(knot: TorusKnot, g: int) -> PowerSum:
    """Sum of (2 tau)^(g-1) over the components.

    The summand is constant on each component, so the sum taken at a generic
    level of tr(mu) does not depend on that level. Since
    (2 tau)^(g-1) = (pq/8)^(g-1) csc^(2g-2)(a*pi/p) csc^(2g-2)(b*pi/q) and
    components pair a and b of equal parity, the sum is evaluated as
    sum over parities of a p-side sum in Q(zeta_2p) times a q-side sum in
    Q(zeta_2q). g = 0 uses powers of sin^2 and inverts nothing.
    """

    if g < 0:
        raise ValueError(f"Genus must be non-negative, got {g}")
    order = knot.field_order
    total = CyclotomicNumber.zero(order)
    for parity in (0, 1):
        p_side = sine_power_sum(knot.p, g - 1, _with_parity(knot.p, parity))
        q_side = sine_power_sum(knot.q, g - 1, _with_parity(knot.q, parity))
        total = total + p_side.lift(order) * q_side.lift(order)
    return PowerSum(g=g, value=total * Fraction(knot.p * knot.q, 8) ** (g - 1))


def _with_parity(n: int, parity: int) -> Tuple[int, ...]:
    return tuple(i for i in range(1, n) if i % 2 == parity)


def torsion_s_matrix_relation_check(
    knot: TorusKnot,
    component: ComponentIndex,
    tolerance: float = RELATION_TOLERANCE,
) -> bool:
    """2 tau * S_{(a,b),(1,1)}^2 = 1 in floats."""

    matrix = s_matrix(knot)
    entry = matrix.entry(component, (1, 1))
    product = 2 * adjoint_torsion(knot, component).float * entry * entry
    return abs(product - 1.0) <= tolerance


def torsion_table(knot: TorusKnot) -> List[TorsionValue]:
    return [adjoint_torsion(knot, component) for component in components(knot)]
