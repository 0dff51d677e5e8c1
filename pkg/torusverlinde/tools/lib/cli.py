"""Command-line front end: torsion, verify, verlinde, curve and scan."""

from __future__ import annotations

import argparse
import io
import multiprocessing
from pathlib import Path
from typing import Any, Callable, Optional, Sequence, Tuple

from torusverlinde.knots import (
    CurveIncidenceError,
    GridIndexError,
    KnotValidationError,
    MultiIndex,
    TorusKnot,
    make_knot,
)
from torusverlinde.knots.checks import CheckContext, run_checks

from .check_loader import CheckRegistryError, load_check_registry
from .config_loader import (
    OUTPUT_FORMATS,
    ConfigError,
    RunConfig,
    load_base_config,
    resolve_output_dir,
)
from .console import emit, print_error, print_log, render_table, verbose_print
from .report_store import ReportStore, ReportStoreError, dumps_json, write_csv_rows
from .reports import (
    CURVE_CSV_HEADER,
    SCAN_CSV_HEADER,
    TORSION_CSV_HEADER,
    VERIFY_CSV_HEADER,
    VERLINDE_CSV_HEADER,
    CurveReport,
    ScanReport,
    TorsionReport,
    VerifyReport,
    VerlindeReport,
    build_curve_report,
    build_scan_report,
    build_scan_row,
    build_torsion_report,
    build_verify_report,
    build_verlinde_report,
    coprime_pairs,
    curve_csv_rows,
    scan_csv_rows,
    torsion_csv_rows,
    verify_csv_rows,
    verlinde_csv_rows,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format (default from config.yaml).")
    common.add_argument("--out", type=str, help="Write reports into this directory instead of stdout.")
    common.add_argument("--config-file", type=str, help="Override the default config.yaml path.")
    common.add_argument("--verbose", action="store_true", help="Print progress diagnostics to stderr.")

    knot = argparse.ArgumentParser(add_help=False)
    knot.add_argument("--p", type=int, required=True, help="First torus-knot parameter.")
    knot.add_argument("--q", type=int, required=True, help="Second torus-knot parameter.")

    parser = argparse.ArgumentParser(
        prog="torusverlinde",
        description="Exact torsion and generalized Verlinde numbers of torus knots.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    torsion = commands.add_parser("torsion", parents=[common, knot], help="Adjoint torsion per component.")
    torsion.add_argument("--g-max", type=int, help="Largest genus for the torsion power sums.")

    verify = commands.add_parser("verify", parents=[common, knot], help="Run every invariant check.")
    verify.add_argument("--g-max", type=int, help="Largest genus for the integrality check.")
    verify.add_argument("--checks", type=str, help="YAML registry of checks to run instead of checks.yaml.")
    verify.add_argument("--inject-fault", action="store_true", help="Flip one fusion coefficient (negative test).")

    verlinde = commands.add_parser("verlinde", parents=[common, knot], help="One generalized Verlinde number.")
    verlinde.add_argument("--g", type=int, required=True, help="Genus.")
    verlinde.add_argument("--punctures", type=str, default="", help="Labels as 'a,b;a,b;...'.")

    curve = commands.add_parser("curve", parents=[common, knot], help="Sample the curve D_{p,q}.")
    curve.add_argument("--samples", type=int, help="Number of parameter samples.")
    curve.add_argument("--t-min", type=float, help="Smallest parameter value.")
    curve.add_argument("--t-max", type=float, help="Largest parameter value.")

    scan = commands.add_parser("scan", parents=[common], help="Integrality verdicts over many knots.")
    scan.add_argument("--p-max", type=int, required=True)
    scan.add_argument("--q-max", type=int, required=True)
    scan.add_argument("--g-max", type=int, help="Largest genus per knot.")
    scan.add_argument("--jobs", type=int, help="Worker processes (default from config.yaml).")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def resolve_config(args: argparse.Namespace) -> RunConfig:
    base = load_base_config(Path(args.config_file).expanduser() if args.config_file else None)
    defaults = base.apply_overrides(
        g_max=getattr(args, "g_max", None),
        output_format=args.format,
        samples=getattr(args, "samples", None),
        t_min=getattr(args, "t_min", None),
        t_max=getattr(args, "t_max", None),
        jobs=getattr(args, "jobs", None),
    )
    verbose_print(args.verbose, f"Effective defaults: {defaults.to_dict()}")
    return RunConfig(
        command=args.command,
        defaults=defaults,
        p=getattr(args, "p", None),
        q=getattr(args, "q", None),
        g=getattr(args, "g", None),
        g_max=defaults.g_max,
        punctures=getattr(args, "punctures", "") or "",
        output_format=defaults.output_format,
        out_dir=resolve_output_dir(args.out),
        p_max=getattr(args, "p_max", None),
        q_max=getattr(args, "q_max", None),
        samples=defaults.samples,
        t_min=defaults.t_min,
        t_max=defaults.t_max,
        jobs=defaults.jobs,
        inject_fault=bool(getattr(args, "inject_fault", False)),
        checks_file=Path(args.checks).expanduser() if getattr(args, "checks", None) else None,
        verbose=args.verbose,
    )


def _knot(config: RunConfig) -> TorusKnot:
    assert config.p is not None and config.q is not None
    knot = make_knot(config.p, config.q)
    verbose_print(config.verbose, f"{knot.label()} with r={knot.r}, s={knot.s}, field order {knot.field_order}")
    return knot


# ----------------------------------------------------------------------
# Output
# ----------------------------------------------------------------------
def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    write_csv_rows(buffer, header, rows)
    return buffer.getvalue()


def deliver(
    config: RunConfig,
    stem: str,
    payload: Any,
    csv_table: Tuple[Sequence[str], Sequence[Sequence[Any]]],
    render_text: Callable[[], str],
) -> None:
    """stdout in the requested format, or JSON plus CSV files under the output directory."""

    header, rows = csv_table
    if config.out_dir is not None:
        store = ReportStore(config.out_dir)
        json_path = store.write_json(f"{stem}.json", payload)
        csv_path = store.write_csv(f"{stem}.csv", header, rows)
        print_log(f"Wrote {json_path} and {csv_path}")
        verbose_print(config.verbose, f"{store.index_file} lists {len(store.list_reports())} report(s)")
        return
    if config.output_format == "json":
        emit(dumps_json(payload))
    elif config.output_format == "csv":
        emit(_csv_text(header, rows))
    else:
        emit(render_text())


def render_torsion_text(report: TorsionReport) -> str:
    knot_rows = [
        (
            f"({row['a']},{row['b']})",
            row["tau_exact"],
            f"{row['tau_float']:.12g}",
            f"{row['excluded_traces']['plus']['float']:.12g}",
            f"{row['excluded_traces']['minus']['float']:.12g}",
        )
        for row in report["components"]
    ]
    sums = [(row["g"], row["value"], "yes" if row["integer"] else "no") for row in report["power_sums"]]
    return "\n".join(
        [
            f"T({report['p']},{report['q']})  r={report['r']}  s={report['s']}",
            render_table(("component", "tau", "tau (float)", "excluded +", "excluded -"), knot_rows),
            render_table(("g", "sum (2 tau)^(g-1)", "integer"), sums),
        ]
    )


def render_verify_text(report: VerifyReport) -> str:
    rows = [(row["name"], "pass" if row["passed"] else "FAIL", row["checked"]) for row in report["checks"]]
    lines = [
        f"T({report['p']},{report['q']})  g_max={report['g_max']}" + ("  (fault injected)" if report["fault_injected"] else ""),
        render_table(("check", "verdict", "assertions"), rows),
    ]
    for row in report["checks"]:
        for failure in row["failures"][:5]:
            lines.append(f"{row['name']}: {failure}")
        if len(row["failures"]) > 5:
            lines.append(f"{row['name']}: ... {len(row['failures']) - 5} more")
    lines.append(f"overall: {'pass' if report['passed'] else 'FAIL'}")
    return "\n".join(lines)


def render_verlinde_text(report: VerlindeReport) -> str:
    n = "; ".join(f"({a},{b})x{times}" for a, b, times in report["n"]) or "0"
    return "\n".join(
        [
            f"T({report['p']},{report['q']})  g={report['g']}  n={n}",
            f"value: {report['value']}",
            f"rational route: {report['routes']['rational']}",
            f"trigonometric route: {report['routes']['trig']}",
            f"agree: {'yes' if report['agree'] else 'no'}",
            f"denominator: {report['denominator']}",
        ]
    )


def render_curve_text(report: CurveReport) -> str:
    singular = [
        (f"({row['a']},{row['b']})", f"{row['X']['float']:.12g}", f"{row['Y']['float']:.12g}")
        for row in report["singular_points"]
    ]
    exceptional = [
        (
            f"({row['a']},{row['b']})",
            ", ".join(f"{t['float']:.12g}" for t in row["trace_parameters"]),
            "[{:.6g} : {:.6g}]".format(*row["intersections"]["plus"]),
            "[{:.6g} : {:.6g}]".format(*row["intersections"]["minus"]),
        )
        for row in report["components"]
    ]
    return "\n".join(
        [
            f"D({report['p']},{report['q']})  {len(singular)} singular point(s)",
            render_table(("node", "X", "Y"), singular),
            render_table(("component", "t", "[Z0:Z1] +", "[Z0:Z1] -"), exceptional),
        ]
    )


def render_scan_text(report: ScanReport) -> str:
    rows = [
        (
            f"T({row['p']},{row['q']})",
            " ".join(row["values"]),
            "yes" if row["all_integer"] else "no",
            "yes" if row["agree"] else "no",
            "pass" if row["passed"] else "FAIL",
        )
        for row in report["rows"]
    ]
    return "\n".join(
        [
            render_table(("knot", "2^(g-2) d(g,0)", "integer", "agree", "verdict"), rows),
            f"overall: {'pass' if report['passed'] else 'FAIL'}",
        ]
    )


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
def run_torsion(config: RunConfig) -> int:
    knot = _knot(config)
    report = build_torsion_report(knot, config.g_max or 0)
    deliver(
        config,
        f"torsion_{knot.p}_{knot.q}",
        report,
        (TORSION_CSV_HEADER, torsion_csv_rows(report)),
        lambda: render_torsion_text(report),
    )
    return EXIT_OK


def run_verify(config: RunConfig) -> int:
    knot = _knot(config)
    checks = load_check_registry(config.checks_file)
    defaults = config.defaults
    g_max = config.g_max or 0
    ctx = CheckContext(
        knot=knot,
        g_max=g_max,
        tolerance=defaults.float_tolerance,
        fusion_max_genus=defaults.fusion_max_genus,
        fusion_max_weight=defaults.fusion_max_weight,
        full_grid_limit=defaults.full_grid_limit,
        sample_size=defaults.sample_size,
        seed=defaults.seed,
        inject_fault=config.inject_fault,
        log=lambda message: verbose_print(config.verbose, message),
    )
    if config.inject_fault:
        print_log("Fault injection enabled: one fusion coefficient is flipped.")
    report = build_verify_report(knot, g_max, config.inject_fault, run_checks(ctx, checks))
    deliver(
        config,
        f"verify_{knot.p}_{knot.q}",
        report,
        (VERIFY_CSV_HEADER, verify_csv_rows(report)),
        lambda: render_verify_text(report),
    )
    return EXIT_OK if report["passed"] else EXIT_FAILURE


def run_verlinde(config: RunConfig) -> int:
    knot = _knot(config)
    assert config.g is not None
    n = MultiIndex.parse(knot, config.punctures)
    report = build_verlinde_report(knot, config.g, n)
    deliver(
        config,
        f"verlinde_{knot.p}_{knot.q}_g{config.g}",
        report,
        (VERLINDE_CSV_HEADER, verlinde_csv_rows(report)),
        lambda: render_verlinde_text(report),
    )
    if not report["agree"]:
        print_error("Rational and trigonometric routes disagree.")
        return EXIT_FAILURE
    return EXIT_OK


def run_curve(config: RunConfig) -> int:
    knot = _knot(config)
    samples, t_min, t_max = config.samples, config.t_min, config.t_max
    assert samples is not None and t_min is not None and t_max is not None
    report = build_curve_report(knot, samples, t_min, t_max)
    deliver(
        config,
        f"curve_{knot.p}_{knot.q}",
        report,
        (CURVE_CSV_HEADER, curve_csv_rows(knot, samples, t_min, t_max)),
        lambda: render_curve_text(report),
    )
    return EXIT_OK


def run_scan(config: RunConfig) -> int:
    assert config.p_max is not None and config.q_max is not None
    g_max = config.g_max or 0
    tasks = [(p, q, g_max) for p, q in coprime_pairs(config.p_max, config.q_max)]
    verbose_print(config.verbose, f"Scanning {len(tasks)} knot(s) with {config.jobs} job(s)")
    if config.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=config.jobs) as pool:
            rows = pool.map(build_scan_row, tasks)
    else:
        rows = [build_scan_row(task) for task in tasks]
    report = build_scan_report(config.p_max, config.q_max, g_max, rows)
    deliver(
        config,
        f"scan_{config.p_max}_{config.q_max}",
        report,
        (SCAN_CSV_HEADER, scan_csv_rows(report)),
        lambda: render_scan_text(report),
    )
    return EXIT_OK if report["passed"] else EXIT_FAILURE


COMMAND_HANDLERS = {
    "torsion": run_torsion,
    "verify": run_verify,
    "verlinde": run_verlinde,
    "curve": run_curve,
    "scan": run_scan,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID

    try:
        config = resolve_config(args)
    except ConfigError as exc:
        print_error(f"Configuration error: {exc}")
        return EXIT_INVALID

    try:
        return COMMAND_HANDLERS[config.command](config)
    except (KnotValidationError, GridIndexError) as exc:
        print_error(f"Invalid input: {exc}")
        return EXIT_INVALID
    except CheckRegistryError as exc:
        print_error(f"Check registry error: {exc}")
        return EXIT_INVALID
    except ReportStoreError as exc:
        print_error(f"Unable to write reports: {exc}")
        return EXIT_INVALID
    except CurveIncidenceError as exc:
        print_error(f"Curve sampling failed: {exc}")
        return EXIT_INVALID
    except (ValueError, ArithmeticError) as exc:
        print_error(f"Invalid input: {exc}")
        return EXIT_INVALID
    except OSError as exc:
        print_error(f"I/O error: {exc}")
        return EXIT_INVALID
