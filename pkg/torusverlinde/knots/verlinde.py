"""Generalized Verlinde numbers of T(p, q) along the trigonometric route.

d(g, n) = sum over the grid of w^(g-1) * prod_x psi_x^(n_x) with
w_ij = pq / (16 sin^2(i*pi/p) sin^2(j*pi/q)) and
psi_x(ij) = S_{a-1}(2cos(i*pi/p)) S_{b-1}(2cos(j*pi/q)) / 2 for x = (a, b).
Every value lives in Q(zeta_2pq) and is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from torusverlinde.algebra import (
    CyclotomicError,
    CyclotomicNumber,
    csc_sq_pi_frac,
    evaluate_at_two_cos,
    sin_sq_pi_frac,
)

from .charvar import TorusKnot, make_knot
from .chebyshev import chebyshev_second, sine_power_sum
from .indices import GridIndex, GridIndexError, KnotValidationError, check_grid_index, iter_grid

Label = Tuple[int, int]


@dataclass(frozen=True)
class MultiIndex:
    """Multiplicities n_{a,b} >= 0 over the grid, stored sparsely in label order."""

    p: int
    q: int
    counts: Tuple[Tuple[GridIndex, int], ...] = ()

    @classmethod
    def empty(cls, knot: TorusKnot) -> "MultiIndex":
        return cls(knot.p, knot.q)

    @classmethod
    def from_labels(cls, knot: TorusKnot, labels: Iterable[Label]) -> "MultiIndex":
        return cls._tally(knot.p, knot.q, labels)

    @classmethod
    def _tally(cls, p: int, q: int, labels: Iterable[Label]) -> "MultiIndex":
        tally: Dict[GridIndex, int] = {}
        for a, b in labels:
            label = check_grid_index(p, q, a, b)
            tally[label] = tally.get(label, 0) + 1
        return cls(p, q, tuple(sorted(tally.items())))

    @classmethod
    def parse(cls, knot: TorusKnot, text: Optional[str]) -> "MultiIndex":
        """Parse "a,b;a,b;..."; an empty string is n = 0."""

        if text is None or not text.strip():
            return cls.empty(knot)
        labels: List[Label] = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = [part.strip() for part in chunk.split(",")]
            if len(parts) != 2:
                raise GridIndexError(f"Puncture {chunk!r} must look like 'a,b'")
            try:
                labels.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise GridIndexError(f"Puncture {chunk!r} must contain integers") from exc
        return cls.from_labels(knot, labels)

    @property
    def weight(self) -> int:
        return sum(count for _, count in self.counts)

    def labels(self) -> List[GridIndex]:
        """Labels with repetition, in lexicographic order."""

        expanded: List[GridIndex] = []
        for label, count in self.counts:
            expanded.extend([label] * count)
        return expanded

    def multiplicity(self, label: Label) -> int:
        return dict(self.counts).get(GridIndex(*label), 0)

    def add(self, label: Label, times: int = 1) -> "MultiIndex":
        return MultiIndex._tally(self.p, self.q, self.labels() + [GridIndex(*label)] * times)

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if (other.p, other.q) != (self.p, self.q):
            raise GridIndexError("Cannot add multi-indices of different knots")
        return MultiIndex._tally(self.p, self.q, self.labels() + other.labels())

    def to_payload(self) -> List[List[int]]:
        return [[label.a, label.b, count] for label, count in self.counts]

    def spec_string(self) -> str:
        return ";".join(f"{a},{b}" for a, b in self.labels())


def multi_indices_up_to(knot: TorusKnot, max_weight: int) -> List[MultiIndex]:
    """All multi-indices of weight <= max_weight, ordered by weight then labels."""

    grid = list(iter_grid(knot.p, knot.q))
    result: List[MultiIndex] = [MultiIndex.empty(knot)]
    frontier: List[Tuple[int, List[GridIndex]]] = [(0, [])]
    for _ in range(max_weight):
        next_frontier: List[Tuple[int, List[GridIndex]]] = []
        for start, labels in frontier:
            for position in range(start, len(grid)):
                extended = labels + [grid[position]]
                next_frontier.append((position, extended))
                result.append(MultiIndex.from_labels(knot, extended))
        frontier = next_frontier
    return result


class TrigVerlinde:
    """Memoized evaluation of d(g, n) for one knot.

    The summand w^(g-1) prod psi splits over the two grid coordinates, so
    d(g, n) = (pq/16)^(g-1) 2^-|n| A_p B_q where A_p is a sum over 0<i<p
    computed in Q(zeta_2p) and B_q likewise in Q(zeta_2q). ``surface`` keeps
    the direct sum over the grid in Q(zeta_2pq).
    """

    def __init__(self, knot: TorusKnot) -> None:
        self.knot = knot
        self.order = knot.field_order
        self.grid: List[GridIndex] = list(iter_grid(knot.p, knot.q))
        self._weights: Dict[GridIndex, CyclotomicNumber] = {}
        self._weight_powers: Dict[Tuple[GridIndex, int], CyclotomicNumber] = {}
        self._ratio: Dict[Tuple[GridIndex, GridIndex], CyclotomicNumber] = {}
        self._values: Dict[Tuple[int, MultiIndex], CyclotomicNumber] = {}

    def weight(self, point: GridIndex) -> CyclotomicNumber:
        """w_ij = pq / (16 sin^2(i*pi/p) sin^2(j*pi/q))."""

        if point not in self._weights:
            i, j = point
            csc_product = csc_sq_pi_frac(i, self.knot.p, self.order) * csc_sq_pi_frac(j, self.knot.q, self.order)
            self._weights[point] = csc_product * Fraction(self.knot.p * self.knot.q, 16)
        return self._weights[point]

    def weight_power(self, point: GridIndex, exponent: int) -> CyclotomicNumber:
        key = (point, exponent)
        if key not in self._weight_powers:
            if exponent < 0:
                i, j = point
                sin_product = sin_sq_pi_frac(i, self.knot.p, self.order) * sin_sq_pi_frac(j, self.knot.q, self.order)
                self._weight_powers[key] = (sin_product * Fraction(16, self.knot.p * self.knot.q)) ** (-exponent)
            else:
                self._weight_powers[key] = self.weight(point) ** exponent
        return self._weight_powers[key]

    def sine_ratio(self, point: GridIndex, label: GridIndex) -> CyclotomicNumber:
        """sin(ia*pi/p) sin(jb*pi/q) / (sin(i*pi/p) sin(j*pi/q)) as a Chebyshev product."""

        key = (point, label)
        if key not in self._ratio:
            i, j = point
            a, b = label
            left = evaluate_at_two_cos(chebyshev_second(a - 1), i, self.knot.p, self.order)
            right = evaluate_at_two_cos(chebyshev_second(b - 1), j, self.knot.q, self.order)
            self._ratio[key] = left * right
        return self._ratio[key]

    def psi(self, point: GridIndex, label: GridIndex) -> CyclotomicNumber:
        return self.sine_ratio(point, label) * Fraction(1, 2)

    def value(self, g: int, n: MultiIndex) -> CyclotomicNumber:
        if g < 0:
            raise ValueError(f"Genus must be non-negative, got {g}")
        key = (g, n)
        if key not in self._values:
            p, q = self.knot.p, self.knot.q
            labels = n.labels()
            a_side = sine_power_sum(p, g - 1, tuple(range(1, p)), tuple(sorted(a - 1 for a, _ in labels)))
            b_side = sine_power_sum(q, g - 1, tuple(range(1, q)), tuple(sorted(b - 1 for _, b in labels)))
            scale = Fraction(p * q, 16) ** (g - 1) * Fraction(1, 2) ** n.weight
            self._values[key] = a_side.lift(self.order) * b_side.lift(self.order) * scale
        return self._values[key]

    def rational(self, g: int, n: MultiIndex) -> Fraction:
        value = self.value(g, n).to_rational()
        if value is None:
            raise CyclotomicError(f"d({g}, {n.spec_string() or '0'}) is not rational: {self.value(g, n)}")
        return value

    def surface(self, g: int, punctures: Sequence[Label]) -> CyclotomicNumber:
        """N_g = sum over the grid of (pq / (8 sin^2 sin^2))^(g-1) * prod of sine ratios."""

        labels = [check_grid_index(self.knot.p, self.knot.q, a, b) for a, b in punctures]
        total = CyclotomicNumber.zero(self.order)
        for point in self.grid:
            term = self.weight_power(point, g - 1) * (Fraction(2) ** (g - 1))
            for label in labels:
                term = term * self.sine_ratio(point, label)
            total = total + term
        return total


_ENGINES: Dict[TorusKnot, TrigVerlinde] = {}


def trig_engine(knot: TorusKnot) -> TrigVerlinde:
    if knot not in _ENGINES:
        _ENGINES[knot] = TrigVerlinde(knot)
    return _ENGINES[knot]


def verlinde_knot_trig(knot: TorusKnot, g: int, n: MultiIndex) -> CyclotomicNumber:
    return trig_engine(knot).value(g, n)


def verlinde_surface(knot: TorusKnot, g: int, punctures: Sequence[Label]) -> CyclotomicNumber:
    if g < 0:
        raise ValueError(f"Genus must be non-negative, got {g}")
    return trig_engine(knot).surface(g, punctures)


def surface_knot_relation(knot: TorusKnot, g: int, n: MultiIndex) -> bool:
    """d(g, n) = 2^(1-g-|n|) N_g(punctures of n), exactly."""

    scale = Fraction(2) ** (1 - g - n.weight)
    return verlinde_knot_trig(knot, g, n) == verlinde_surface(knot, g, n.labels()) * scale


def d0_one(knot: TorusKnot, x: Label) -> Fraction:
    label = check_grid_index(knot.p, knot.q, *x)
    return Fraction(2) if label == (1, 1) else Fraction(0)


def d0_two(knot: TorusKnot, x: Label, y: Label) -> Fraction:
    left = check_grid_index(knot.p, knot.q, *x)
    right = check_grid_index(knot.p, knot.q, *y)
    return Fraction(1) if left == right else Fraction(0)


def admissible_triple(values: Tuple[int, int, int], bound: int) -> bool:
    total = sum(values)
    return 2 * max(values) < total < 2 * bound and total % 2 == 1


def d0_three(knot: TorusKnot, x: Label, y: Label, z: Label) -> Fraction:
    """1/2 when both the a-side (bound p) and b-side (bound q) triangle conditions hold."""

    labels = [check_grid_index(knot.p, knot.q, *label) for label in (x, y, z)]
    a_side = tuple(label.a for label in labels)
    b_side = tuple(label.b for label in labels)
    if admissible_triple(a_side, knot.p) and admissible_triple(b_side, knot.q):
        return Fraction(1, 2)
    return Fraction(0)


def d1_single(knot: TorusKnot, x: Label) -> Fraction:
    """(p-a)(q-b)/2 for odd a and b, else 0."""

    a, b = check_grid_index(knot.p, knot.q, *x)
    if a % 2 and b % 2:
        return Fraction((knot.p - a) * (knot.q - b), 2)
    return Fraction(0)


@dataclass(frozen=True)
class ClassicalVerlinde:
    q: int
    g: int
    value: Fraction

    @property
    def divisor(self) -> int:
        return 2 ** self.g

    @property
    def divisible(self) -> bool:
        return self.value.denominator == 1 and self.value.numerator % self.divisor == 0


def classical_verlinde_check(q: int, g: int) -> ClassicalVerlinde:
    """(q/2)^(g-1) sum_{0<j<q} sin^(2-2g)(pi*j/q), computed in Q(zeta_2q)."""

    if q < 3 or q % 2 == 0:
        raise KnotValidationError(f"q must be an odd integer >= 3, got {q}")
    if g < 0:
        raise ValueError(f"Genus must be non-negative, got {g}")
    total = sine_power_sum(q, g - 1, tuple(range(1, q)))
    value = (total * (Fraction(q, 2) ** (g - 1))).to_rational()
    if value is None:
        raise CyclotomicError(f"Classical Verlinde sum for q={q}, g={g} is not rational")
    return ClassicalVerlinde(q=q, g=g, value=value)


def classical_matches_knot(q: int, g: int) -> bool:
    """The classical number equals 4^(g-1) d(g, 0) for T(2, q)."""

    knot = make_knot(2, q)
    knot_value = trig_engine(knot).rational(g, MultiIndex.empty(knot))
    return classical_verlinde_check(q, g).value == knot_value * Fraction(4) ** (g - 1)
