"""SL(2,C) character variety of a torus knot group and its birational model.

Irreducible components are labelled by (a, b) with 0<a<p, 0<b<q, a = b (mod 2).
Component and trace data are exact in Q(zeta_2pq); the Moebius maps onto the
components are evaluated in floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from torusverlinde.algebra import CyclotomicNumber, evaluate_at_two_cos, two_cos_pi_frac

from .chebyshev import CurveIncidenceError, chebyshev_first, curve_polynomials
from .indices import (
    ComponentIndex,
    GridIndex,
    KnotValidationError,
    check_component_index,
    iter_components,
    iter_grid,
    validate_pair,
)

DEFAULT_TOLERANCE = 1e-9


class DegenerateProjectiveError(ArithmeticError):
    """Raised when both projective coordinates vanish."""


@dataclass(frozen=True)
class TorusKnot:
    """T(p, q) with meridian data mu = alpha^-r beta^s, ps - qr = 1, 0 <= r < p."""

    p: int
    q: int
    r: int
    s: int

    @property
    def field_order(self) -> int:
        """Order N = 2pq of the ambient cyclotomic field."""

        return 2 * self.p * self.q

    @property
    def grid_size(self) -> int:
        return (self.p - 1) * (self.q - 1)

    def grid(self) -> List[GridIndex]:
        return list(iter_grid(self.p, self.q))

    def component(self, a: int, b: int) -> ComponentIndex:
        return check_component_index(self.p, self.q, a, b)

    def label(self) -> str:
        return f"T({self.p},{self.q})"


def make_knot(p: int, q: int) -> TorusKnot:
    """Normalize to 0 < p < q and pick the canonical (r, s) by extended Euclid."""

    validate_pair(p, q)
    p, q = sorted((abs(p), abs(q)))
    r = (-pow(q, -1, p)) % p
    s, remainder = divmod(1 + q * r, p)
    if remainder or p * s - q * r != 1:  # pragma: no cover - arithmetic guarantee
        raise KnotValidationError(f"Unable to solve ps - qr = 1 for ({p}, {q})")
    return TorusKnot(p=p, q=q, r=r, s=s)


def components(knot: TorusKnot) -> List[ComponentIndex]:
    return list(iter_components(knot.p, knot.q))


@dataclass(frozen=True)
class TracePair:
    """Two exact trace values 2cos((ar/p +- bs/q)pi) with their float embeddings."""

    plus: CyclotomicNumber
    minus: CyclotomicNumber

    @property
    def floats(self) -> Tuple[float, float]:
        return (self.plus.embed().real, self.minus.embed().real)

    def as_set(self) -> frozenset:
        return frozenset((self.plus, self.minus))


def excluded_traces(knot: TorusKnot, component: ComponentIndex) -> TracePair:
    """Values of tr_mu removed from the component C_{a,b}."""

    a, b = component
    n = knot.p * knot.q
    plus = two_cos_pi_frac(a * knot.r * knot.q + b * knot.s * knot.p, n, knot.field_order)
    minus = two_cos_pi_frac(a * knot.r * knot.q - b * knot.s * knot.p, n, knot.field_order)
    return TracePair(plus=plus, minus=minus)


def component_traces(knot: TorusKnot, component: ComponentIndex) -> Tuple[CyclotomicNumber, CyclotomicNumber]:
    """(tr_alpha, tr_beta) = (2cos(a*pi/p), 2cos(b*pi/q)) on the component."""

    a, b = component
    return (
        two_cos_pi_frac(a, knot.p, knot.field_order),
        two_cos_pi_frac(b, knot.q, knot.field_order),
    )


def reducible_trace(knot: TorusKnot, homology_exponent: int, t: Any) -> Any:
    """tr_gamma = C_k(tr_mu) on the reducible part when [gamma] = [mu^k]."""

    return chebyshev_first(homology_exponent).evaluate(t)


@dataclass(frozen=True)
class BlowupPoint:
    """(X, Y, [Z0 : Z1]) in C^2 x P^1."""

    X: Any
    Y: Any
    Z0: Any
    Z1: Any

    def normalized_direction(self) -> Tuple[complex, complex]:
        z0, z1 = _as_complex(self.Z0), _as_complex(self.Z1)
        scale = max(abs(z0), abs(z1))
        return (z0 / scale, z1 / scale)


def _is_exact(value: Any) -> bool:
    return isinstance(value, (int, Fraction, CyclotomicNumber)) and not isinstance(value, bool)


def _is_zero(value: Any) -> bool:
    if isinstance(value, CyclotomicNumber):
        return value.is_zero()
    return value == 0


def _as_complex(value: Any) -> complex:
    if isinstance(value, CyclotomicNumber):
        return value.embed()
    return complex(value)


def phi_red(knot: TorusKnot, t: Any) -> BlowupPoint:
    """Reducible characters to D_{p,q}: t -> (tr_alpha, tr_beta, [C_q'(t) : C_p'(t)])."""

    z0 = chebyshev_first(knot.q).derivative().evaluate(t)
    z1 = chebyshev_first(knot.p).derivative().evaluate(t)
    if _is_zero(z0) and _is_zero(z1):
        raise DegenerateProjectiveError(f"[C_q'(t) : C_p'(t)] degenerates to [0 : 0] at t={t}")
    return BlowupPoint(
        X=reducible_trace(knot, knot.q, t),
        Y=reducible_trace(knot, knot.p, t),
        Z0=z0,
        Z1=z1,
    )


def on_curve(knot: TorusKnot, point: BlowupPoint, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    curve = curve_polynomials(knot.p, knot.q)
    value = curve.F.evaluate(point.X, point.Y)
    if _is_exact(point.X) and _is_exact(point.Y):
        return _is_zero(value)
    scale = max(1.0, abs(chebyshev_first(knot.p).evaluate(_as_complex(point.X))))
    return abs(_as_complex(value)) <= tolerance * scale


def on_blowup_surface(knot: TorusKnot, point: BlowupPoint, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """F_X(X,Y) Z0 = -F_Y(X,Y) Z1."""

    curve = curve_polynomials(knot.p, knot.q)
    fx = curve.FX.evaluate(point.X, point.Y)
    fy = curve.FY.evaluate(point.X, point.Y)
    residual = fx * point.Z0 + fy * point.Z1
    if all(_is_exact(v) for v in (point.X, point.Y, point.Z0, point.Z1)):
        return _is_zero(residual)
    scale = max(1.0, abs(_as_complex(fx * point.Z0)), abs(_as_complex(fy * point.Z1)))
    return abs(_as_complex(residual)) <= tolerance * scale


def curve_param(knot: TorusKnot, t: Any, tolerance: float = DEFAULT_TOLERANCE) -> BlowupPoint:
    """The parametrization t -> (C_q(t), C_p(t), [C_q'(t) : C_p'(t)]) of D_{p,q}."""

    point = phi_red(knot, t)
    if not (on_curve(knot, point, tolerance) and on_blowup_surface(knot, point, tolerance)):
        raise CurveIncidenceError(f"Parametrized point at t={t} left the resolved curve")
    return point


def solve_trace_param(knot: TorusKnot, component: ComponentIndex) -> List[CyclotomicNumber]:
    """Solutions t of C_q(t) = 2cos(a*pi/p), C_p(t) = 2cos(b*pi/q).

    Every solution has the form t = 2cos(e*pi/pq) with 0 <= e <= pq; the
    candidates are located from the congruences e = +-a (mod 2p), e = +-b
    (mod 2q) and then verified by exact substitution.
    """

    a, b = component
    n = knot.p * knot.q
    target_x, target_y = component_traces(knot, component)
    cq, cp = chebyshev_first(knot.q), chebyshev_first(knot.p)
    solutions: List[CyclotomicNumber] = []
    for e in range(n + 1):
        if (e - a) % (2 * knot.p) and (e + a) % (2 * knot.p):
            continue
        if (e - b) % (2 * knot.q) and (e + b) % (2 * knot.q):
            continue
        at_x = evaluate_at_two_cos(cq, e, n, knot.field_order)
        at_y = evaluate_at_two_cos(cp, e, n, knot.field_order)
        if at_x == target_x and at_y == target_y:
            solutions.append(two_cos_pi_frac(e, n, knot.field_order))
    solutions.sort(key=lambda value: value.embed().real)
    return solutions


@dataclass(frozen=True)
class ProjectivePoint:
    z0: float
    z1: float

    def proportional_to(self, other: Tuple[Any, Any], tolerance: float = DEFAULT_TOLERANCE) -> bool:
        w0, w1 = (_as_complex(v) for v in other)
        scale = math.hypot(self.z0, self.z1) * math.hypot(abs(w0), abs(w1))
        return abs(self.z0 * w1 - self.z1 * w0) <= tolerance * max(scale, 1.0)


def _sin_pi(numerator: int, denominator: int) -> float:
    return math.sin(math.pi * numerator / denominator)


def exceptional_intersections(knot: TorusKnot, component: ComponentIndex) -> Tuple[ProjectivePoint, ProjectivePoint]:
    """[q sin(a*pi/p) : +p sin(b*pi/q)] and [q sin(a*pi/p) : -p sin(b*pi/q)]."""

    a, b = component
    z0 = knot.q * _sin_pi(a, knot.p)
    z1 = knot.p * _sin_pi(b, knot.q)
    return ProjectivePoint(z0, z1), ProjectivePoint(z0, -z1)


@dataclass(frozen=True)
class MoebiusImage:
    """Result of Phi_{a,b}; ``kind`` is "regular", "excluded" or "infinity"."""

    kind: str
    value: Optional[float]

    @property
    def is_boundary(self) -> bool:
        return self.kind != "regular"


def moebius_phi(
    knot: TorusKnot,
    component: ComponentIndex,
    z: Tuple[float, float],
    tolerance: float = DEFAULT_TOLERANCE,
) -> MoebiusImage:
    """Phi_{a,b}: [Z0:Z1] -> w -> 2cos(ar/p - bs/q)pi - 4 sin(ar pi/p) sin(bs pi/q) w/(w-1).

    The three inputs outside L_{a,b} come back as boundary images: the two
    intersection points give the excluded traces, [1:0] gives infinity.
    """

    a, b = component
    z0, z1 = float(z[0]), float(z[1])
    if z0 == 0 and z1 == 0:
        raise DegenerateProjectiveError("[0 : 0] is not a projective point")
    size = math.hypot(z0, z1)
    z0, z1 = z0 / size, z1 / size
    big_a = knot.p * _sin_pi(b, knot.q)
    big_b = knot.q * _sin_pi(a, knot.p)
    numerator = big_a * z0 + big_b * z1
    denominator = big_a * z0 - big_b * z1
    angle_r = math.pi * a * knot.r / knot.p
    angle_s = math.pi * b * knot.s / knot.q
    if abs(z1) <= tolerance:
        return MoebiusImage(kind="infinity", value=None)
    if abs(numerator) <= tolerance * (abs(big_a) + abs(big_b)):
        return MoebiusImage(kind="excluded", value=2 * math.cos(angle_r - angle_s))
    if abs(denominator) <= tolerance * (abs(big_a) + abs(big_b)):
        return MoebiusImage(kind="excluded", value=2 * math.cos(angle_r + angle_s))
    # w / (w - 1) = numerator / (numerator - denominator) = numerator / (2 B z1)
    ratio = numerator / (2 * big_b * z1)
    value = 2 * math.cos(angle_r - angle_s) - 4 * math.sin(angle_r) * math.sin(angle_s) * ratio
    return MoebiusImage(kind="regular", value=value)


@dataclass(frozen=True)
class CurveSample:
    t: float
    X: float
    Y: float
    Z0: float
    Z1: float

    def as_row(self) -> Tuple[float, float, float, float, float]:
        return (self.t, self.X, self.Y, self.Z0, self.Z1)


def sample_curve(knot: TorusKnot, samples: int, t_min: float, t_max: float) -> List[CurveSample]:
    """Evenly spaced float samples of D_{p,q}; Z is scaled so max(|Z0|, |Z1|) = 1."""

    if samples < 2:
        raise ValueError("samples must be at least 2")
    if not t_min < t_max:
        raise ValueError("t_min must be smaller than t_max")
    step = (t_max - t_min) / (samples - 1)
    rows: List[CurveSample] = []
    for i in range(samples):
        t = t_min + i * step
        point = curve_param(knot, t)
        z0, z1 = point.normalized_direction()
        rows.append(CurveSample(t=t, X=float(point.X), Y=float(point.Y), Z0=z0.real, Z1=z1.real))
    return rows
