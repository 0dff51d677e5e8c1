"""Character-variety model: knot normalization, traces, parametrization, Moebius maps."""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

import pytest

from torusverlinde.knots import (
    DegenerateProjectiveError,
    GridIndexError,
    KnotValidationError,
    components,
    curve_param,
    exceptional_intersections,
    excluded_traces,
    make_knot,
    moebius_phi,
    on_blowup_surface,
    phi_red,
    reducible_trace,
    sample_curve,
    solve_trace_param,
)
from torusverlinde.knots.charvar import component_traces

SMALL_KNOTS = [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7), (4, 5), (3, 7)]


def test_make_knot_canonical_meridian() -> None:
    trefoil = make_knot(2, 3)
    assert (trefoil.r, trefoil.s) == (1, 2)
    assert (make_knot(3, 5).r, make_knot(3, 5).s) == (1, 2)
    assert make_knot(3, 2) == trefoil
    assert make_knot(-2, 3) == trefoil
    assert trefoil.field_order == 12
    assert trefoil.label() == "T(2,3)"


@pytest.mark.parametrize("p,q", [(p, q) for p in range(2, 16) for q in range(p + 1, 16) if gcd(p, q) == 1])
def test_meridian_relation_and_component_count(p: int, q: int) -> None:
    knot = make_knot(p, q)

    assert knot.p * knot.s - knot.q * knot.r == 1
    assert 0 <= knot.r < knot.p
    assert len(components(knot)) == (p - 1) * (q - 1) // 2


@pytest.mark.parametrize("p,q", [(4, 6), (1, 5), (2, 2), (0, 3)])
def test_make_knot_rejects_invalid_pairs(p: int, q: int) -> None:
    with pytest.raises(KnotValidationError):
        make_knot(p, q)


def test_component_labels() -> None:
    assert components(make_knot(2, 3)) == [(1, 1)]
    assert components(make_knot(2, 5)) == [(1, 1), (1, 3)]
    with pytest.raises(GridIndexError):
        make_knot(2, 5).component(1, 2)
    with pytest.raises(GridIndexError):
        make_knot(2, 5).component(2, 2)


def test_trefoil_excluded_traces() -> None:
    knot = make_knot(2, 3)
    traces = excluded_traces(knot, knot.component(1, 1))

    assert traces.floats == pytest.approx((-math.sqrt(3), math.sqrt(3)), abs=1e-12)
    assert (traces.plus * traces.plus).to_rational() == 3


@pytest.mark.parametrize("p,q", SMALL_KNOTS)
def test_excluded_traces_distinct_and_bounded(p: int, q: int) -> None:
    knot = make_knot(p, q)
    for component in components(knot):
        traces = excluded_traces(knot, component)
        assert traces.plus != traces.minus
        assert all(abs(value) <= 2 + 1e-12 for value in traces.floats)


@pytest.mark.parametrize("p,q", SMALL_KNOTS)
def test_trace_parameters_match_excluded_traces(p: int, q: int) -> None:
    knot = make_knot(p, q)
    for component in components(knot):
        solutions = solve_trace_param(knot, component)
        assert len(solutions) == 2
        assert frozenset(solutions) == excluded_traces(knot, component).as_set()


@pytest.mark.parametrize("p,q", SMALL_KNOTS)
def test_trace_parameters_hit_blowup_centres(p: int, q: int) -> None:
    knot = make_knot(p, q)
    for component in components(knot):
        centre = component_traces(knot, component)
        plus, minus = exceptional_intersections(knot, component)
        matched = set()
        for t in solve_trace_param(knot, component):
            point = curve_param(knot, t)
            assert (point.X, point.Y) == centre
            assert on_blowup_surface(knot, point)
            direction = (point.Z0, point.Z1)
            if plus.proportional_to(direction):
                matched.add("plus")
            if minus.proportional_to(direction):
                matched.add("minus")
        assert matched == {"plus", "minus"}


def test_trefoil_intersections() -> None:
    knot = make_knot(2, 3)
    plus, minus = exceptional_intersections(knot, knot.component(1, 1))

    assert (plus.z0, plus.z1) == pytest.approx((3.0, math.sqrt(3)))
    assert (minus.z0, minus.z1) == pytest.approx((3.0, -math.sqrt(3)))


def test_curve_param_exact_examples() -> None:
    knot = make_knot(2, 3)

    point = curve_param(knot, 2)
    assert (point.X, point.Y, point.Z0, point.Z1) == (2, 2, 9, 4)

    origin = curve_param(knot, Fraction(0))
    assert (origin.X, origin.Y, origin.Z0, origin.Z1) == (0, -2, -3, 0)


def test_curve_param_rational_and_float_points() -> None:
    knot = make_knot(3, 5)
    for t in (Fraction(1, 3), Fraction(-7, 4), Fraction(5, 2)):
        assert on_blowup_surface(knot, curve_param(knot, t))
    for t in (-1.9, 0.37, 2.6):
        assert on_blowup_surface(knot, curve_param(knot, t))


def test_phi_red_matches_reducible_traces() -> None:
    knot = make_knot(2, 5)
    point = phi_red(knot, Fraction(1, 2))

    assert point.X == reducible_trace(knot, knot.q, Fraction(1, 2))
    assert point.Y == reducible_trace(knot, knot.p, Fraction(1, 2))


def test_reducible_trace_examples() -> None:
    knot = make_knot(2, 3)

    assert reducible_trace(knot, 1, Fraction(3, 7)) == Fraction(3, 7)
    assert reducible_trace(knot, 0, Fraction(3, 7)) == 2
    assert math.isclose(reducible_trace(knot, 3, 2 * math.cos(0.3)), 2 * math.cos(0.9), abs_tol=1e-12)
    assert reducible_trace(knot, -3, Fraction(1)) == reducible_trace(knot, 3, Fraction(1))


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 4), (3, 5)])
def test_moebius_boundary_images(p: int, q: int) -> None:
    knot = make_knot(p, q)
    for component in components(knot):
        a, b = component
        plus, minus = exceptional_intersections(knot, component)
        angle_r = math.pi * a * knot.r / p
        angle_s = math.pi * b * knot.s / q

        image_plus = moebius_phi(knot, component, (plus.z0, plus.z1))
        image_minus = moebius_phi(knot, component, (minus.z0, minus.z1))
        image_infinity = moebius_phi(knot, component, (1.0, 0.0))

        assert image_plus.kind == "excluded"
        assert image_plus.value == pytest.approx(2 * math.cos(angle_r + angle_s), abs=1e-9)
        assert image_minus.kind == "excluded"
        assert image_minus.value == pytest.approx(2 * math.cos(angle_r - angle_s), abs=1e-9)
        assert image_infinity.kind == "infinity" and image_infinity.value is None
        assert image_infinity.is_boundary


def test_moebius_regular_points_avoid_excluded_values() -> None:
    knot = make_knot(2, 5)
    for component in components(knot):
        excluded = excluded_traces(knot, component).floats
        for z in ((0.0, 1.0), (1.0, 1.0), (2.0, -3.0), (0.3, 0.7)):
            image = moebius_phi(knot, component, z)
            assert image.kind == "regular"
            assert math.isfinite(image.value)
            assert all(abs(image.value - value) > 1e-6 for value in excluded)


def test_moebius_rejects_zero_vector() -> None:
    knot = make_knot(2, 3)
    with pytest.raises(DegenerateProjectiveError):
        moebius_phi(knot, knot.component(1, 1), (0.0, 0.0))


def test_sample_curve_rows() -> None:
    knot = make_knot(2, 3)
    rows = sample_curve(knot, 100, -2.5, 2.5)

    assert len(rows) == 100
    assert rows[0].t == -2.5
    assert rows[-1].t == pytest.approx(2.5)
    for row in rows:
        assert max(abs(row.Z0), abs(row.Z1)) == pytest.approx(1.0)
        assert row.X == pytest.approx(row.t ** 3 - 3 * row.t)
        assert row.Y == pytest.approx(row.t ** 2 - 2)


def test_sample_curve_rejects_bad_ranges() -> None:
    knot = make_knot(2, 3)
    with pytest.raises(ValueError):
        sample_curve(knot, 1, -1.0, 1.0)
    with pytest.raises(ValueError):
        sample_curve(knot, 10, 1.0, 1.0)
