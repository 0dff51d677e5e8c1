"""Rational route to d(g, n) through the fusion rules.

Genus-zero three-point values N_xyz = d(0, l_x + l_y + l_z) form a symmetric
3-tensor. The two fusion recurrences then give

  d(g, m + l_x + l_y) = sum_z N_xyz d(g, m + l_z)        (weight reduction)
  d(1, l_x + l_y)     = sum_w N_xyw u1[w] = D1[x][y]     (u1 = d(1, l_w))
  d(g, l_x)           = (D1^(g-1) u1)[x]                 (g >= 1)
  d(g, 0)             = trace(D1^(g-1))                  (g >= 1)

with d(0, 0) = sum_z d(0, l_z)^2 = 4. Every N_xyz lies in {0, 1/2}, so the
engine works with the integer arrays 2N, 2u1 and 4D1 and divides by the
matching power of two at the end; matrix powers use Python integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from torusverlinde.algebra import two_adic_exponent

from .charvar import TorusKnot
from .indices import GridIndex, check_grid_index, iter_grid
from .torsion import torsion_power_sum
from .verlinde import MultiIndex, admissible_triple, d0_one

Label = Tuple[int, int]
PairChooser = Callable[[List[GridIndex]], Tuple[int, int]]

FAULT_TRIPLE: Tuple[GridIndex, GridIndex, GridIndex] = (GridIndex(1, 1), GridIndex(1, 1), GridIndex(1, 1))


@dataclass(frozen=True)
class FusionTensor:
    """N_xyz stored as the integer array ``twice`` = 2N over the grid labels."""

    labels: Tuple[GridIndex, ...]
    twice: np.ndarray = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    def position(self, label: Label) -> int:
        return self.labels.index(GridIndex(*label))

    def entry(self, x: Label, y: Label, z: Label) -> Fraction:
        return Fraction(int(self.twice[self.position(x), self.position(y), self.position(z)]), 2)

    def is_symmetric(self) -> bool:
        return all(np.array_equal(self.twice, self.twice.transpose(perm)) for perm in itertools.permutations(range(3)))

    def entries_in_range(self) -> bool:
        return bool(np.isin(self.twice, (0, 1)).all())

    def with_flipped(self, x: Label, y: Label, z: Label) -> "FusionTensor":
        """Copy with N_xyz (and its permutations) replaced by 1/2 - N_xyz."""

        twice = self.twice.copy()
        positions = (self.position(x), self.position(y), self.position(z))
        flipped = 1 - twice[positions]
        for perm in set(itertools.permutations(positions)):
            twice[perm] = flipped
        return FusionTensor(labels=self.labels, twice=twice)


def _side_table(bound: int) -> np.ndarray:
    size = bound - 1
    table = np.zeros((size, size, size), dtype=np.int8)
    for i, j, k in itertools.product(range(size), repeat=3):
        table[i, j, k] = admissible_triple((i + 1, j + 1, k + 1), bound)
    return table


def fusion_tensor(knot: TorusKnot) -> FusionTensor:
    """2N_xyz is the product of the a-side (bound p) and b-side (bound q) admissibility tables."""

    labels = tuple(iter_grid(knot.p, knot.q))
    size = len(labels)
    twice = np.einsum("ace,bdf->abcdef", _side_table(knot.p), _side_table(knot.q)).reshape(size, size, size)
    return FusionTensor(labels=labels, twice=twice)


@dataclass(frozen=True)
class FusionMatrix:
    """D1[x][y] = d(1, l_x + l_y)."""

    labels: Tuple[GridIndex, ...]
    values: np.ndarray = field(compare=False, repr=False)

    def entry(self, x: Label, y: Label) -> Fraction:
        i = self.labels.index(GridIndex(*x))
        j = self.labels.index(GridIndex(*y))
        return self.values[i, j]

    def is_symmetric(self) -> bool:
        return all(self.values[i, j] == self.values[j, i] for i, j in itertools.combinations(range(len(self.labels)), 2))

    def denominators_divide_two(self) -> bool:
        return all(Fraction(value).denominator in (1, 2) and value >= 0 for value in self.values.flat)


def lexicographic_pair(labels: List[GridIndex]) -> Tuple[int, int]:
    return (0, 1)


class FusionEngine:
    """Memoized rational evaluation of d(g, n) for one knot."""

    def __init__(self, knot: TorusKnot, tensor: Optional[FusionTensor] = None) -> None:
        self.knot = knot
        self.tensor = tensor or fusion_tensor(knot)
        self.labels: Tuple[GridIndex, ...] = self.tensor.labels
        twice = self.tensor.twice
        self.u0 = np.array([d0_one(knot, label) for label in self.labels], dtype=object)
        # 2 u1 and 4 D1
        self._u1_twice = np.einsum("xzz->x", twice, dtype=np.int64).astype(object)
        self._d1_quad = np.tensordot(twice.astype(object), self._u1_twice, axes=([2], [0]))
        self.u1 = np.array([Fraction(int(v), 2) for v in self._u1_twice], dtype=object)
        self.matrix = FusionMatrix(
            labels=self.labels,
            values=np.vectorize(lambda v: Fraction(int(v), 4), otypes=[object])(self._d1_quad),
        )
        self._powers: List[np.ndarray] = [np.identity(len(self.labels), dtype=np.int64).astype(object)]
        self._cache: Dict[Tuple[int, MultiIndex], Fraction] = {}

    @classmethod
    def with_fault(cls, knot: TorusKnot) -> "FusionEngine":
        """Engine whose N_{(1,1),(1,1),(1,1)} has been flipped; used to exercise failure paths."""

        return cls(knot, fusion_tensor(knot).with_flipped(*FAULT_TRIPLE))

    def d1_contracted(self, x: Label) -> Fraction:
        """u1[x] = d(1, l_x) = sum_z N_xzz."""

        return self.u1[self.labels.index(GridIndex(*x))]

    def scaled_power(self, exponent: int) -> np.ndarray:
        """(4 D1)^exponent with Python integer entries."""

        while len(self._powers) <= exponent:
            self._powers.append(self._powers[-1].dot(self._d1_quad))
        return self._powers[exponent]

    def d_rational(self, g: int, n: MultiIndex, choose_pair: Optional[PairChooser] = None) -> Fraction:
        """d(g, n) from the fusion rules.

        Weight >= 2 is reduced one pair at a time; the default picks the two
        smallest labels. A custom ``choose_pair`` receives the label list and
        returns two positions in it; results are not memoized in that case.
        """

        if g < 0:
            raise ValueError(f"Genus must be non-negative, got {g}")
        key = (g, n)
        if choose_pair is None and key in self._cache:
            return self._cache[key]
        value = self._evaluate(g, n, choose_pair)
        if choose_pair is None:
            self._cache[key] = value
        return value

    def _evaluate(self, g: int, n: MultiIndex, choose_pair: Optional[PairChooser]) -> Fraction:
        labels = n.labels()
        if not labels:
            if g == 0:
                return sum((value * value for value in self.u0), Fraction(0))
            return Fraction(int(np.trace(self.scaled_power(g - 1))), 4 ** (g - 1))
        if len(labels) == 1:
            idx = self.labels.index(labels[0])
            if g == 0:
                return Fraction(self.u0[idx])
            return Fraction(int(self.scaled_power(g - 1)[idx].dot(self._u1_twice)), 2 * 4 ** (g - 1))
        first, second = (choose_pair or lexicographic_pair)(labels)
        x, y = labels[first], labels[second]
        rest = [label for pos, label in enumerate(labels) if pos not in (first, second)]
        i, j = self.labels.index(x), self.labels.index(y)
        total = Fraction(0)
        for z, label in enumerate(self.labels):
            coefficient = int(self.tensor.twice[i, j, z])
            if coefficient:
                reduced = MultiIndex.from_labels(self.knot, rest + [label])
                total += Fraction(coefficient, 2) * self.d_rational(g, reduced, choose_pair)
        return total

    def d0_multi(self, labels: Sequence[Label]) -> "GenusZeroValue":
        """d(0, l_x1 + ... + l_xm) with the (1/2)^(m-2) Z denominator bound."""

        n = MultiIndex.from_labels(self.knot, labels)
        return GenusZeroValue(points=n.weight, value=self.d_rational(0, n))

    def d_genus_via_d1(self, g: int) -> Fraction:
        """d(g, 0) = sum_x d(g-1, l_x) d(1, l_x)."""

        if g < 1:
            raise ValueError(f"Genus must be at least 1, got {g}")
        total = Fraction(0)
        for idx, label in enumerate(self.labels):
            single = MultiIndex.from_labels(self.knot, [label])
            total += self.d_rational(g - 1, single) * self.u1[idx]
        return total


@dataclass(frozen=True)
class GenusZeroValue:
    points: int
    value: Fraction

    @property
    def within_bound(self) -> bool:
        return denominator_within_bound(self.points, self.value)


_ENGINES: Dict[TorusKnot, FusionEngine] = {}


def fusion_engine(knot: TorusKnot, *, fault: bool = False) -> FusionEngine:
    """Shared engine per knot; a faulty engine is always built fresh."""

    if fault:
        return FusionEngine.with_fault(knot)
    if knot not in _ENGINES:
        _ENGINES[knot] = FusionEngine(knot)
    return _ENGINES[knot]


def fusion_matrix(knot: TorusKnot) -> FusionMatrix:
    return fusion_engine(knot).matrix


def d1_single_contracted(knot: TorusKnot, x: Label) -> Fraction:
    check_grid_index(knot.p, knot.q, *x)
    return fusion_engine(knot).d1_contracted(x)


def d_rational(knot: TorusKnot, g: int, n: MultiIndex, choose_pair: Optional[PairChooser] = None) -> Fraction:
    return fusion_engine(knot).d_rational(g, n, choose_pair)


def d0_multi(knot: TorusKnot, labels: Sequence[Label]) -> GenusZeroValue:
    return fusion_engine(knot).d0_multi(labels)


def d_genus_via_d1(knot: TorusKnot, g: int) -> Fraction:
    return fusion_engine(knot).d_genus_via_d1(g)


def denominator_within_bound(g: int, value: Fraction) -> bool:
    """value lies in (1/2)^(g-2) Z; used for d(g, 0) and for genus-zero values with g points."""

    return two_adic_exponent(value) <= max(0, g - 2) and value.denominator & (value.denominator - 1) == 0


@dataclass(frozen=True)
class IntegralityRow:
    g: int
    d: Fraction
    scaled: Fraction
    power_sum: Optional[Fraction]
    denominator_ok: bool

    @property
    def integer(self) -> bool:
        return self.scaled.denominator == 1

    @property
    def agree(self) -> bool:
        return self.power_sum is not None and self.power_sum == self.scaled

    @property
    def passed(self) -> bool:
        return self.integer and self.agree and self.denominator_ok


@dataclass(frozen=True)
class IntegralityReport:
    knot: TorusKnot
    rows: Tuple[IntegralityRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def failures(self) -> List[IntegralityRow]:
        return [row for row in self.rows if not row.passed]


def integrality_report(knot: TorusKnot, g_max: int, engine: Optional[FusionEngine] = None) -> IntegralityReport:
    """2^(g-2) d(g, 0) for 0 <= g <= g_max, against the torsion power sums."""

    if g_max < 0:
        raise ValueError(f"g_max must be non-negative, got {g_max}")
    engine = engine or fusion_engine(knot)
    empty = MultiIndex.empty(knot)
    rows: List[IntegralityRow] = []
    for g in range(g_max + 1):
        d = engine.d_rational(g, empty)
        rows.append(
            IntegralityRow(
                g=g,
                d=d,
                scaled=d * Fraction(2) ** (g - 2),
                power_sum=torsion_power_sum(knot, g).rational,
                denominator_ok=denominator_within_bound(g, d),
            )
        )
    return IntegralityReport(knot=knot, rows=tuple(rows))
