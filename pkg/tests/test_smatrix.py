"""Float S-matrix of the (p, q) grid, its SU(2)_k block and the Chebyshev orthogonality lemma."""

from __future__ import annotations

import math

import numpy as np
import pytest

from torusverlinde.knots import GridIndexError, make_knot, s_matrix, wzw_s_matrix, zagier_lemma_check
from torusverlinde.knots.smatrix import wzw_embedding_deviation, zagier_grid


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 7)])
def test_symmetric_and_orthogonal(p: int, q: int) -> None:
    matrix = s_matrix(make_knot(p, q))

    assert matrix.size == (p - 1) * (q - 1)
    assert matrix.is_symmetric()
    assert matrix.orthogonality_deviation() < 1e-12


def test_trefoil_entries() -> None:
    matrix = s_matrix(make_knot(2, 3))

    assert matrix.entry((1, 1), (1, 1)) == pytest.approx(1.0)
    assert matrix.entry((1, 1), (1, 2)) == pytest.approx(1.0)
    assert matrix.entry((1, 2), (1, 2)) == pytest.approx(-1.0)
    with pytest.raises(GridIndexError):
        matrix.entry((2, 1), (1, 1))


def test_squared_entries_are_exact() -> None:
    matrix = s_matrix(make_knot(3, 5))
    for x in matrix.labels:
        for y in matrix.labels:
            assert matrix.squared_exact(x, y).embed().real == pytest.approx(matrix.entry(x, y) ** 2, abs=1e-12)


def test_s_matrix_is_read_only() -> None:
    matrix = s_matrix(make_knot(2, 5))
    with pytest.raises(ValueError):
        matrix.values[0, 0] = 0.0


def test_wzw_block() -> None:
    level_one = wzw_s_matrix(1)

    assert np.allclose(level_one @ level_one, np.eye(2))
    for q in (3, 5, 7, 9):
        assert wzw_embedding_deviation(make_knot(2, q)) < 1e-12
    with pytest.raises(ValueError):
        wzw_embedding_deviation(make_knot(3, 4))
    with pytest.raises(ValueError):
        wzw_s_matrix(0)


@pytest.mark.parametrize("k", range(2, 13))
def test_chebyshev_orthogonality(k: int) -> None:
    assert all(zagier_lemma_check(k, j1, j2) for j1, j2 in zagier_grid(k))


def test_orthogonality_rejects_bad_roots() -> None:
    with pytest.raises(ValueError):
        zagier_lemma_check(3, 0, 1)
    with pytest.raises(ValueError):
        zagier_lemma_check(3, 1, 3)
    with pytest.raises(ValueError):
        zagier_lemma_check(1, 1, 1)


def test_level_two_grid() -> None:
    assert zagier_grid(3) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert math.isclose(float(wzw_s_matrix(2)[0, 0]), 0.5)
