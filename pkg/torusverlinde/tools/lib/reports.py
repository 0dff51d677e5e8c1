"""Report records emitted by the CLI and the functions that build them."""

from __future__ import annotations

from math import gcd
from typing import Any, Dict, List, Sequence, Tuple, TypedDict

from torusverlinde.algebra import CyclotomicNumber, format_fraction
from torusverlinde.knots import (
    MultiIndex,
    TorusKnot,
    components,
    d_rational,
    exceptional_intersections,
    excluded_traces,
    integrality_report,
    make_knot,
    sample_curve,
    singular_points,
    solve_trace_param,
    torsion_power_sum,
    torsion_table,
    verlinde_knot_trig,
)
from torusverlinde.knots.checks import CheckResult

CURVE_CSV_HEADER = ("t", "X", "Y", "Z0", "Z1")
TORSION_CSV_HEADER = ("a", "b", "tau_exact", "tau_float", "excluded_plus", "excluded_minus")
SCAN_CSV_HEADER = ("p", "q", "all_integer", "agree", "passed", "values")
VERIFY_CSV_HEADER = ("check", "passed", "checked", "failures")
VERLINDE_CSV_HEADER = ("p", "q", "g", "n", "value", "trig", "agree", "denominator")


class CyclotomicPayload(TypedDict):
    order: int
    coeffs: List[str]
    float: float


class TracePayload(TypedDict):
    plus: CyclotomicPayload
    minus: CyclotomicPayload


class ComponentRow(TypedDict):
    a: int
    b: int
    tau: CyclotomicPayload
    tau_exact: str
    tau_float: float
    excluded_traces: TracePayload


class PowerSumRow(TypedDict):
    g: int
    value: str
    integer: bool


class TorsionReport(TypedDict):
    p: int
    q: int
    r: int
    s: int
    components: List[ComponentRow]
    power_sums: List[PowerSumRow]


class VerlindeReport(TypedDict):
    p: int
    q: int
    g: int
    n: List[List[int]]
    weight: int
    value: str
    routes: Dict[str, str]
    agree: bool
    denominator: int


class CheckRow(TypedDict):
    name: str
    passed: bool
    checked: int
    failures: List[str]


class VerifyReport(TypedDict):
    p: int
    q: int
    g_max: int
    fault_injected: bool
    checks: List[CheckRow]
    passed: bool


class SingularPointRow(TypedDict):
    a: int
    b: int
    X: CyclotomicPayload
    Y: CyclotomicPayload


class ExceptionalRow(TypedDict):
    a: int
    b: int
    excluded_traces: TracePayload
    trace_parameters: List[CyclotomicPayload]
    intersections: Dict[str, List[float]]


class CurveReport(TypedDict):
    p: int
    q: int
    samples: int
    t_min: float
    t_max: float
    singular_points: List[SingularPointRow]
    components: List[ExceptionalRow]


class ScanRow(TypedDict):
    p: int
    q: int
    values: List[str]
    all_integer: bool
    agree: bool
    passed: bool


class ScanReport(TypedDict):
    p_max: int
    q_max: int
    g_max: int
    rows: List[ScanRow]
    passed: bool


def exact_string(value: CyclotomicNumber) -> str:
    """Fraction string when rational, else the power-basis expression in zeta_N."""

    rational = value.to_rational()
    return format_fraction(rational) if rational is not None else str(value)


def _payload(value: CyclotomicNumber) -> CyclotomicPayload:
    return value.to_payload()  # type: ignore[return-value]


def build_torsion_report(knot: TorusKnot, g_max: int) -> TorsionReport:
    rows: List[ComponentRow] = []
    for value in torsion_table(knot):
        traces = excluded_traces(knot, value.component)
        rows.append(
            {
                "a": value.component.a,
                "b": value.component.b,
                "tau": _payload(value.exact),
                "tau_exact": exact_string(value.exact),
                "tau_float": value.float,
                "excluded_traces": {"plus": _payload(traces.plus), "minus": _payload(traces.minus)},
            }
        )
    sums: List[PowerSumRow] = []
    for g in range(g_max + 1):
        power_sum = torsion_power_sum(knot, g)
        sums.append({"g": g, "value": power_sum.display(), "integer": power_sum.is_integer})
    return {"p": knot.p, "q": knot.q, "r": knot.r, "s": knot.s, "components": rows, "power_sums": sums}


def torsion_csv_rows(report: TorsionReport) -> List[Tuple[Any, ...]]:
    return [
        (
            row["a"],
            row["b"],
            row["tau_exact"],
            repr(row["tau_float"]),
            repr(row["excluded_traces"]["plus"]["float"]),
            repr(row["excluded_traces"]["minus"]["float"]),
        )
        for row in report["components"]
    ]


def build_verlinde_report(knot: TorusKnot, g: int, n: MultiIndex) -> VerlindeReport:
    rational = d_rational(knot, g, n)
    trig = verlinde_knot_trig(knot, g, n)
    trig_rational = trig.to_rational()
    return {
        "p": knot.p,
        "q": knot.q,
        "g": g,
        "n": n.to_payload(),
        "weight": n.weight,
        "value": format_fraction(rational),
        "routes": {"rational": format_fraction(rational), "trig": exact_string(trig)},
        "agree": trig_rational is not None and trig_rational == rational,
        "denominator": rational.denominator,
    }


def build_verify_report(knot: TorusKnot, g_max: int, fault: bool, results: Sequence[CheckResult]) -> VerifyReport:
    rows: List[CheckRow] = [
        {"name": result.name, "passed": result.passed, "checked": result.checked, "failures": list(result.failures)}
        for result in results
    ]
    return {
        "p": knot.p,
        "q": knot.q,
        "g_max": g_max,
        "fault_injected": fault,
        "checks": rows,
        "passed": all(row["passed"] for row in rows),
    }


def build_curve_report(knot: TorusKnot, samples: int, t_min: float, t_max: float) -> CurveReport:
    singular: List[SingularPointRow] = [
        {"a": point.index.a, "b": point.index.b, "X": _payload(point.exact[0]), "Y": _payload(point.exact[1])}
        for point in singular_points(knot.p, knot.q)
    ]
    exceptional: List[ExceptionalRow] = []
    for component in components(knot):
        traces = excluded_traces(knot, component)
        plus, minus = exceptional_intersections(knot, component)
        exceptional.append(
            {
                "a": component.a,
                "b": component.b,
                "excluded_traces": {"plus": _payload(traces.plus), "minus": _payload(traces.minus)},
                "trace_parameters": [_payload(t) for t in solve_trace_param(knot, component)],
                "intersections": {"plus": [plus.z0, plus.z1], "minus": [minus.z0, minus.z1]},
            }
        )
    return {
        "p": knot.p,
        "q": knot.q,
        "samples": samples,
        "t_min": t_min,
        "t_max": t_max,
        "singular_points": singular,
        "components": exceptional,
    }


def curve_csv_rows(knot: TorusKnot, samples: int, t_min: float, t_max: float) -> List[Tuple[str, ...]]:
    return [tuple(repr(value) for value in row.as_row()) for row in sample_curve(knot, samples, t_min, t_max)]


def coprime_pairs(p_max: int, q_max: int) -> List[Tuple[int, int]]:
    """Coprime 2 <= p < q with p <= p_max and q <= q_max, lexicographic."""

    return [(p, q) for p in range(2, p_max + 1) for q in range(p + 1, q_max + 1) if gcd(p, q) == 1]


def build_scan_row(task: Tuple[int, int, int]) -> ScanRow:
    """One knot of a scan; module-level so worker processes can pickle it."""

    p, q, g_max = task
    report = integrality_report(make_knot(p, q), g_max)
    return {
        "p": p,
        "q": q,
        "values": [format_fraction(row.scaled) for row in report.rows],
        "all_integer": all(row.integer for row in report.rows),
        "agree": all(row.agree for row in report.rows),
        "passed": report.passed,
    }


def build_scan_report(p_max: int, q_max: int, g_max: int, rows: Sequence[ScanRow]) -> ScanReport:
    return {
        "p_max": p_max,
        "q_max": q_max,
        "g_max": g_max,
        "rows": list(rows),
        "passed": all(row["passed"] for row in rows),
    }


def scan_csv_rows(report: ScanReport) -> List[Tuple[Any, ...]]:
    return [
        (row["p"], row["q"], row["all_integer"], row["agree"], row["passed"], ";".join(row["values"]))
        for row in report["rows"]
    ]


def verify_csv_rows(report: VerifyReport) -> List[Tuple[Any, ...]]:
    return [(row["name"], row["passed"], row["checked"], len(row["failures"])) for row in report["checks"]]


def verlinde_csv_rows(report: VerlindeReport) -> List[Tuple[Any, ...]]:
    n = ";".join(f"{a},{b}" for a, b, times in report["n"] for _ in range(times))
    return [
        (
            report["p"],
            report["q"],
            report["g"],
            n,
            report["value"],
            report["routes"]["trig"],
            report["agree"],
            report["denominator"],
        )
    ]
