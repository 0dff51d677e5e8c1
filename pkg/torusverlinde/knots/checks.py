"""Invariant groups run by ``verify``.

Each check takes a :class:`CheckContext` and returns a :class:`CheckResult`.
Large index ranges are thinned to a deterministic sample.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

from torusverlinde.algebra import CyclotomicError, Polynomial

from .charvar import (
    TorusKnot,
    components,
    curve_param,
    exceptional_intersections,
    excluded_traces,
    moebius_phi,
    solve_trace_param,
)
from .chebyshev import (
    CurveIncidenceError,
    chebyshev_first,
    chebyshev_second,
    compose,
    critical_points,
    incidence_polynomial,
    singular_points,
)
from .fusion import FusionEngine, fusion_engine, integrality_report
from .indices import GridIndex
from .smatrix import s_matrix, wzw_embedding_deviation, zagier_grid, zagier_lemma_check
from .torsion import (
    adjoint_torsion,
    hessian_at,
    hessian_closed_form,
    torsion_from_hessian,
    torsion_power_sum,
    torsion_s_matrix_relation_check,
)
from .verlinde import (
    MultiIndex,
    TrigVerlinde,
    classical_matches_knot,
    classical_verlinde_check,
    d0_one,
    d0_three,
    d0_two,
    d1_single,
    multi_indices_up_to,
    surface_knot_relation,
    trig_engine,
)

T = TypeVar("T")

COMPOSITION_DEGREE_LIMIT = 64


@dataclass
class CheckContext:
    knot: TorusKnot
    g_max: int
    tolerance: float = 1e-9
    fusion_max_genus: int = 2
    fusion_max_weight: int = 2
    full_grid_limit: int = 2048
    sample_size: int = 256
    seed: int = 0
    inject_fault: bool = False
    log: Callable[[str], None] = lambda message: None
    engine: FusionEngine = field(init=False)
    trig: TrigVerlinde = field(init=False)

    def __post_init__(self) -> None:
        self.engine = fusion_engine(self.knot, fault=self.inject_fault)
        self.trig = trig_engine(self.knot)

    def sample(self, items: Sequence[T], salt: str = "") -> List[T]:
        """All items when at most ``full_grid_limit``, else a seeded sample in original order."""

        items = list(items)
        if len(items) <= self.full_grid_limit:
            return items
        rng = random.Random(f"{self.seed}:{salt}")
        picked = sorted(rng.sample(range(len(items)), min(self.sample_size, len(items))))
        return [items[idx] for idx in picked]


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)


def check_chebyshev_identities(ctx: CheckContext) -> CheckResult:
    """C_k o C_l = C_kl, C_k' = k S_{k-1}, (z^2 - 4) S_{k-1}' = k C_k - z S_{k-1}."""

    result = CheckResult("chebyshev_identities")
    bound = max(ctx.knot.q, 8)
    z = Polynomial.x()
    for k in range(1, bound + 1):
        c_k, s_prev = chebyshev_first(k), chebyshev_second(k - 1)
        result.expect(chebyshev_first(-k) == c_k, f"C_-{k} != C_{k}")
        result.expect(c_k.derivative() == s_prev.scale(k), f"C_{k}' != {k} S_{k-1}")
        lhs = (z * z - 4) * s_prev.derivative()
        result.expect(lhs == c_k.scale(k) - z * s_prev, f"(z^2-4) S_{k-1}' identity fails at k={k}")
        for l in range(1, bound + 1):
            if k * l <= COMPOSITION_DEGREE_LIMIT:
                result.expect(
                    compose(c_k, chebyshev_first(l)) == chebyshev_first(k * l),
                    f"C_{k} o C_{l} != C_{k * l}",
                )
    return result


def check_geometry(ctx: CheckContext) -> CheckResult:
    knot = ctx.knot
    result = CheckResult("geometry")
    comps = components(knot)
    result.expect(len(comps) == knot.grid_size // 2, f"expected {knot.grid_size // 2} components, got {len(comps)}")
    try:
        result.expect(len(singular_points(knot.p, knot.q)) == len(comps), "singular point count mismatch")
        result.expect(len(critical_points(knot.p, knot.q)) == knot.grid_size, "critical point count mismatch")
    except CurveIncidenceError as exc:
        result.expect(False, str(exc))
    result.expect(incidence_polynomial(knot.p, knot.q).is_zero(), "curve does not lie on the blow-up surface")
    for numerator in range(-6, 7):
        t = Fraction(numerator, 3)
        result.expect(_parametrizes(knot, t), f"t={t} leaves the resolved curve")
    for component in ctx.sample(comps, "geometry"):
        traces = excluded_traces(knot, component)
        solved = solve_trace_param(knot, component)
        result.expect(
            len(solved) == 2 and frozenset(solved) == traces.as_set(),
            f"trace solutions differ from excluded traces on {tuple(component)}",
        )
        plus_point, minus_point = exceptional_intersections(knot, component)
        plus = moebius_phi(knot, component, (plus_point.z0, plus_point.z1))
        minus = moebius_phi(knot, component, (minus_point.z0, minus_point.z1))
        infinity = moebius_phi(knot, component, (1.0, 0.0))
        plus_float, minus_float = traces.floats
        result.expect(
            plus.kind == "excluded" and math.isclose(plus.value, plus_float, abs_tol=ctx.tolerance),
            f"plus intersection maps to {plus} on {tuple(component)}",
        )
        result.expect(
            minus.kind == "excluded" and math.isclose(minus.value, minus_float, abs_tol=ctx.tolerance),
            f"minus intersection maps to {minus} on {tuple(component)}",
        )
        result.expect(infinity.kind == "infinity", f"[1:0] maps to {infinity} on {tuple(component)}")
    return result


def _parametrizes(knot: TorusKnot, t: Fraction) -> bool:
    try:
        curve_param(knot, t)
    except CurveIncidenceError:
        return False
    return True


def _random_pair_chooser(rng: random.Random) -> Callable[[List[GridIndex]], Tuple[int, int]]:
    def choose(labels: List[GridIndex]) -> Tuple[int, int]:
        first, second = rng.sample(range(len(labels)), 2)
        return first, second

    return choose


def check_hessian(ctx: CheckContext) -> CheckResult:
    knot = ctx.knot
    result = CheckResult("hessian")
    for component in ctx.sample(components(knot), "hessian"):
        label = tuple(component)
        hessian = hessian_at(knot, component)
        result.expect(hessian == hessian_closed_form(knot, component), f"Hessian closed form fails on {label}")
        result.expect(hessian.embed().real < 0, f"Hessian is not negative on {label}")
        direct = adjoint_torsion(knot, component)
        result.expect(torsion_from_hessian(knot, component).exact == direct.exact, f"torsion mismatch on {label}")
        result.expect(direct.is_positive(), f"torsion is not positive on {label}")
    return result


def check_s_matrix(ctx: CheckContext) -> CheckResult:
    knot = ctx.knot
    result = CheckResult("s_matrix")
    matrix = s_matrix(knot)
    result.expect(matrix.is_symmetric(), "S-matrix is not symmetric")
    deviation = matrix.orthogonality_deviation()
    result.expect(deviation <= ctx.tolerance, f"orthogonality deviation {deviation:.3e}")
    for component in ctx.sample(components(knot), "s_matrix"):
        result.expect(
            torsion_s_matrix_relation_check(knot, component, ctx.tolerance),
            f"2 tau S^2 != 1 on {tuple(component)}",
        )
    for x, y in ctx.sample(list(itertools.product(matrix.labels, repeat=2)), "s_squared"):
        exact = matrix.squared_exact(x, y).embed().real
        result.expect(
            math.isclose(exact, matrix.entry(x, y) ** 2, abs_tol=ctx.tolerance),
            f"squared entry mismatch at {tuple(x)}, {tuple(y)}",
        )
    for k in sorted({knot.p, knot.q}):
        for j1, j2 in ctx.sample(zagier_grid(k), f"zagier{k}"):
            result.expect(zagier_lemma_check(k, j1, j2), f"orthogonality lemma fails for k={k}, j=({j1},{j2})")
    if knot.p == 2:
        deviation = wzw_embedding_deviation(knot)
        result.expect(deviation <= ctx.tolerance, f"SU(2)_{knot.q - 2} block deviates by {deviation:.3e}")
    return result


def check_initial_values(ctx: CheckContext) -> CheckResult:
    knot, trig, engine = ctx.knot, ctx.trig, ctx.engine
    result = CheckResult("initial_values")
    empty = MultiIndex.empty(knot)
    result.expect(trig.rational(0, empty) == 4, "trig d(0, 0) != 4")
    result.expect(engine.d_rational(0, empty) == 4, "rational d(0, 0) != 4")
    result.expect(trig.rational(1, empty) == knot.grid_size, "trig d(1, 0) != (p-1)(q-1)")
    result.expect(engine.d_rational(1, empty) == knot.grid_size, "rational d(1, 0) != (p-1)(q-1)")
    grid = knot.grid()
    for x in grid:
        single = MultiIndex.from_labels(knot, [x])
        result.expect(trig.rational(0, single) == d0_one(knot, x), f"d(0, l_{tuple(x)}) mismatch")
        closed = d1_single(knot, x)
        result.expect(engine.d1_contracted(x) == closed, f"contracted d(1, l_{tuple(x)}) != closed form")
        result.expect(trig.rational(1, single) == closed, f"trig d(1, l_{tuple(x)}) != closed form")
    for x, y in ctx.sample(list(itertools.combinations_with_replacement(grid, 2)), "d0_two"):
        pair = MultiIndex.from_labels(knot, [x, y])
        result.expect(trig.rational(0, pair) == d0_two(knot, x, y), f"d(0, l_{tuple(x)} + l_{tuple(y)}) mismatch")
    for x, y, z in ctx.sample(list(itertools.combinations_with_replacement(grid, 3)), "d0_three"):
        triple = MultiIndex.from_labels(knot, [x, y, z])
        expected = d0_three(knot, x, y, z)
        result.expect(trig.rational(0, triple) == expected, f"trig d(0, {triple.spec_string()}) != {expected}")
        result.expect(engine.tensor.entry(x, y, z) == expected, f"N at {triple.spec_string()} != {expected}")
    return result


def _multi_indices(ctx: CheckContext, salt: str, max_weight: Optional[int] = None) -> List[MultiIndex]:
    weight = ctx.fusion_max_weight if max_weight is None else max_weight
    return ctx.sample(multi_indices_up_to(ctx.knot, weight), salt)


def _fusion_rules(ctx: CheckContext, result: CheckResult, route: str, value: Callable[[int, MultiIndex], Fraction]) -> None:
    knot = ctx.knot
    grid = knot.grid()
    indices = _multi_indices(ctx, f"rules-{route}")
    genera = range(ctx.fusion_max_genus + 1)
    for g in genera:
        for n in indices:
            lhs = sum((value(g, n.add(x, 2)) for x in grid), Fraction(0))
            result.expect(lhs == value(g + 1, n), f"[{route}] rule 1 fails at g={g}, n={n.spec_string() or '0'}")
    pairs = ctx.sample(list(itertools.combinations_with_replacement(indices, 2)), f"pairs-{route}")
    for g, h in itertools.combinations_with_replacement(genera, 2):
        for n, m in pairs:
            lhs = sum((value(g, n.add(x)) * value(h, m.add(x)) for x in grid), Fraction(0))
            result.expect(
                lhs == value(g + h, n + m),
                f"[{route}] rule 2 fails at g={g}, g'={h}, n={n.spec_string() or '0'}, n'={m.spec_string() or '0'}",
            )


def check_fusion_rules(ctx: CheckContext) -> CheckResult:
    result = CheckResult("fusion_rules")
    tensor, matrix = ctx.engine.tensor, ctx.engine.matrix
    result.expect(tensor.is_symmetric(), "fusion tensor is not symmetric")
    result.expect(tensor.entries_in_range(), "fusion tensor has entries outside {0, 1/2}")
    result.expect(matrix.is_symmetric(), "D1 is not symmetric")
    result.expect(matrix.denominators_divide_two(), "D1 has entries outside (1/2)Z>=0")
    try:
        _fusion_rules(ctx, result, "trig", ctx.trig.rational)
    except CyclotomicError as exc:
        result.expect(False, str(exc))
    _fusion_rules(ctx, result, "rational", ctx.engine.d_rational)
    return result


def check_dual_route(ctx: CheckContext) -> CheckResult:
    knot, trig, engine = ctx.knot, ctx.trig, ctx.engine
    result = CheckResult("dual_route")
    empty = MultiIndex.empty(knot)
    for g in range(ctx.g_max + 1):
        rational = engine.d_rational(g, empty)
        try:
            result.expect(rational == trig.rational(g, empty), f"d({g}, 0): routes disagree")
        except CyclotomicError as exc:
            result.expect(False, str(exc))
        if g >= 1:
            result.expect(engine.d_genus_via_d1(g) == rational, f"d({g}, 0): contraction orders disagree")
    rng = random.Random(ctx.seed)
    for g in range(ctx.fusion_max_genus + 1):
        for n in _multi_indices(ctx, f"dual-{g}", ctx.fusion_max_weight + 1):
            rational = engine.d_rational(g, n)
            label = n.spec_string() or "0"
            result.expect(rational == trig.rational(g, n), f"d({g}, {label}): routes disagree")
            result.expect(surface_knot_relation(knot, g, n), f"surface relation fails at g={g}, n={label}")
            if n.weight >= 3:
                reordered = engine.d_rational(g, n, choose_pair=_random_pair_chooser(rng))
                result.expect(reordered == rational, f"d({g}, {label}) depends on the reduction order")
    return result


def check_integrality(ctx: CheckContext) -> CheckResult:
    knot = ctx.knot
    result = CheckResult("integrality")
    report = integrality_report(knot, ctx.g_max, ctx.engine)
    for row in report.rows:
        ctx.log(f"g={row.g} 2^(g-2) d(g,0) = {row.scaled} power sum = {row.power_sum}")
        result.expect(row.integer, f"g={row.g}: 2^(g-2) d(g, 0) = {row.scaled} is not an integer")
        result.expect(row.agree, f"g={row.g}: power sum {row.power_sum} != {row.scaled}")
        result.expect(row.denominator_ok, f"g={row.g}: d(g, 0) = {row.d} escapes (1/2)^(g-2) Z")
    result.expect(torsion_power_sum(knot, 0).rational == 1, "power sum at g=0 is not 1")
    grid = knot.grid()
    rng = random.Random(ctx.seed + 1)
    for points in range(3, 6):
        labels = [grid[rng.randrange(len(grid))] for _ in range(points)]
        value = ctx.engine.d0_multi(labels)
        result.expect(value.within_bound, f"d(0, {labels}) = {value.value} escapes (1/2)^{points - 2} Z")
    if knot.p == 2:
        for g in range(ctx.g_max + 1):
            classical = classical_verlinde_check(knot.q, g)
            result.expect(classical.divisible, f"classical number {classical.value} not in 2^{g} Z")
            result.expect(classical_matches_knot(knot.q, g), f"classical number != 4^(g-1) d({g}, 0)")
    return result


DEFAULT_CHECKS: List[Callable[[CheckContext], CheckResult]] = [
    check_chebyshev_identities,
    check_geometry,
    check_hessian,
    check_s_matrix,
    check_initial_values,
    check_fusion_rules,
    check_dual_route,
    check_integrality,
]


def run_checks(ctx: CheckContext, checks: Optional[Sequence[Callable[[CheckContext], CheckResult]]] = None) -> List[CheckResult]:
    results: List[CheckResult] = []
    for check in checks or DEFAULT_CHECKS:
        result = check(ctx)
        ctx.log(f"{result.name}: {'pass' if result.passed else 'FAIL'} ({result.checked} assertions)")
        results.append(result)
    return results
