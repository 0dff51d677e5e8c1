"""Modular S-matrix of the (p, q) grid and the SU(2)_k matrix it contains."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from torusverlinde.algebra import CyclotomicNumber, root_of_unity, sin_sq_pi_frac, two_cos_pi_frac

from .charvar import TorusKnot
from .chebyshev import chebyshev_second
from .indices import GridIndex, check_grid_index, iter_grid

Label = Tuple[int, int]


@dataclass(frozen=True)
class SMatrix:
    """S_{(i,j),(a,b)} = sqrt(8/pq) sin(ia*pi/p) sin(jb*pi/q) over the full grid."""

    knot: TorusKnot
    labels: Tuple[GridIndex, ...]
    values: np.ndarray = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def positions(self) -> Dict[GridIndex, int]:
        return {label: idx for idx, label in enumerate(self.labels)}

    def _position(self, label: Label) -> int:
        a, b = label
        return self.positions[check_grid_index(self.knot.p, self.knot.q, a, b)]

    def entry(self, x: Label, y: Label) -> float:
        return float(self.values[self._position(x), self._position(y)])

    def squared_exact(self, x: Label, y: Label) -> CyclotomicNumber:
        """(8/pq) sin^2(ia*pi/p) sin^2(jb*pi/q) in Q(zeta_2pq)."""

        (i, j), (a, b) = (check_grid_index(self.knot.p, self.knot.q, *x), check_grid_index(self.knot.p, self.knot.q, *y))
        order = self.knot.field_order
        product = sin_sq_pi_frac(i * a, self.knot.p, order) * sin_sq_pi_frac(j * b, self.knot.q, order)
        return product * Fraction(8, self.knot.p * self.knot.q)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.values, self.values.T))

    def orthogonality_deviation(self) -> float:
        """max |sum_z S_{z,x} S_{z,y} - 2 delta_{x,y}|."""

        gram = self.values.T @ self.values
        return float(np.max(np.abs(gram - 2.0 * np.eye(self.size))))


@lru_cache(maxsize=None)
def s_matrix(knot: TorusKnot) -> SMatrix:
    labels = tuple(iter_grid(knot.p, knot.q))
    i = np.array([label.a for label in labels], dtype=float)
    j = np.array([label.b for label in labels], dtype=float)
    sin_a = np.sin(np.outer(i, i) * math.pi / knot.p)
    sin_b = np.sin(np.outer(j, j) * math.pi / knot.q)
    values = math.sqrt(8.0 / (knot.p * knot.q)) * sin_a * sin_b
    values.setflags(write=False)
    return SMatrix(knot=knot, labels=labels, values=values)


def wzw_s_matrix(level: int) -> np.ndarray:
    """SU(2)_k: S_{ij} = sqrt(2/(k+2)) sin(pi (i+1)(j+1) / (k+2)), 0 <= i, j <= k."""

    if level < 1:
        raise ValueError(f"Level must be positive, got {level}")
    n = level + 2
    idx = np.arange(1, level + 2, dtype=float)
    return math.sqrt(2.0 / n) * np.sin(np.outer(idx, idx) * math.pi / n)


def wzw_embedding_deviation(knot: TorusKnot) -> float:
    """For p = 2: max |S_{(1,i+1),(1,j+1)} - sqrt(2) S^{SU(2)_{q-2}}_{ij}|."""

    if knot.p != 2:
        raise ValueError("The SU(2)_k block only sits inside the (2, q) grid")
    matrix = s_matrix(knot)
    return float(np.max(np.abs(matrix.values - math.sqrt(2.0) * wzw_s_matrix(knot.q - 2))))


def _chebyshev_row(k: int, j: int) -> List[CyclotomicNumber]:
    point = two_cos_pi_frac(j, k, 2 * k)
    return [chebyshev_second(a - 1).evaluate(point) for a in range(1, k)]


def zagier_lemma_check(k: int, j1: int, j2: int) -> bool:
    """Orthogonality of S_{a-1}(zeta + zeta^-1) for zeta = exp(i*pi*j/k), exactly in Q(zeta_2k).

    sum_{0<a<k} S_{a-1}(zeta1 + 1/zeta1) S_{a-1}(zeta2 + 1/zeta2) is -2k/(zeta1 - 1/zeta1)^2
    when j1 = j2 and 0 otherwise. The diagonal case also checks
    sum_a (sin(pi*j*a/k) / sin(pi*j/k))^2 = k / (2 sin^2(pi*j/k)).
    """

    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    for j in (j1, j2):
        if not 0 < j < k:
            raise ValueError(f"Root index must satisfy 0 < j < {k}, got {j}")
    order = 2 * k
    lhs = CyclotomicNumber.zero(order)
    for left, right in zip(_chebyshev_row(k, j1), _chebyshev_row(k, j2)):
        lhs = lhs + left * right
    if j1 != j2:
        return lhs.is_zero()
    zeta = root_of_unity(order, j1)
    difference = zeta - zeta.inverse()
    rhs = (difference * difference).inverse() * (-2 * k)
    sin_sq_j = sin_sq_pi_frac(j1, k, order)
    ratio_sum = CyclotomicNumber.zero(order)
    for a in range(1, k):
        ratio_sum = ratio_sum + sin_sq_pi_frac(j1 * a, k, order)
    specialization = ratio_sum * sin_sq_j.inverse() == sin_sq_j.inverse() * Fraction(k, 2)
    return lhs == rhs and specialization


def zagier_grid(k: int) -> Sequence[Tuple[int, int]]:
    return [(j1, j2) for j1 in range(1, k) for j2 in range(1, k)]
