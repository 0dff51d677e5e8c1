"""End-to-end tests of the command-line front end."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from torusverlinde.tools.lib import cli

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "schemas"


@pytest.fixture(autouse=True)
def no_env_output(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("TORUSVERLINDE_OUT", raising=False)
    monkeypatch.setenv("TORUSVERLINDE_NO_COLOR", "1")


def run(capsys: pytest.CaptureFixture[str], *argv: str):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate(payload, schema_name: str) -> None:
    schema = json.loads((SCHEMA_DIR / f"{schema_name}.schema.json").read_text(encoding="utf-8"))
    jsonschema.validate(payload, schema)


def test_torsion_json(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "torsion", "--p", "3", "--q", "5", "--format", "json")
    payload = json.loads(out)

    assert code == cli.EXIT_OK
    assert (payload["p"], payload["q"], payload["r"], payload["s"]) == (3, 5, 1, 2)
    assert len(payload["components"]) == 4
    assert [row["value"] for row in payload["power_sums"][:4]] == ["1", "4", "20", "120"]
    validate(payload, "torsion_report")


def test_torsion_text_for_trefoil(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "torsion", "--p", "3", "--q", "2", "--g-max", "2")

    assert code == cli.EXIT_OK
    assert out.startswith("T(2,3)  r=1  s=2")
    assert "1/2" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("torsion", "--p", "4", "--q", "6"),
        ("torsion", "--p", "1", "--q", "5"),
        ("verlinde", "--p", "2", "--q", "3", "--g", "0", "--punctures", "9,9"),
        ("verlinde", "--p", "2", "--q", "3", "--g", "-1"),
        ("torsion", "--p", "2"),
        ("scan", "--p-max", "1", "--q-max", "5"),
        ("curve", "--p", "2", "--q", "3", "--t-min", "1", "--t-max", "0"),
        ("frobnicate",),
    ],
)
def test_invalid_input_exits_two(capsys: pytest.CaptureFixture[str], argv) -> None:
    code, out, _ = run(capsys, *argv)

    assert code == cli.EXIT_INVALID
    assert out == ""


def test_bad_config_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "torsion", "--p", "2", "--q", "3", "--config-file", str(tmp_path / "none.yaml"))

    assert code == cli.EXIT_INVALID
    assert "Configuration error" in err


def test_verlinde_values(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "verlinde", "--p", "2", "--q", "5", "--g", "2", "--format", "json")
    payload = json.loads(out)

    assert code == cli.EXIT_OK
    assert payload["value"] == "5"
    assert payload["agree"] is True
    assert payload["routes"] == {"rational": "5", "trig": "5"}
    validate(payload, "verlinde_report")

    code, out, _ = run(capsys, "verlinde", "--p", "2", "--q", "5", "--g", "1", "--punctures", "1,3", "--format", "json")
    assert code == cli.EXIT_OK
    assert json.loads(out)["value"] == "1"

    code, out, _ = run(capsys, "verlinde", "--p", "2", "--q", "5", "--g", "3")
    assert code == cli.EXIT_OK
    assert "value: 15/2" in out
    assert "denominator: 2" in out


def test_curve_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "curve", "--p", "2", "--q", "3", "--samples", "100", "--format", "csv")
    lines = out.strip().splitlines()

    assert code == cli.EXIT_OK
    assert lines[0] == "t,X,Y,Z0,Z1"
    assert len(lines) == 101
    assert lines[1].split(",")[0] == "-2.5"


def test_curve_json(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "curve", "--p", "3", "--q", "4", "--format", "json")
    payload = json.loads(out)

    assert code == cli.EXIT_OK
    assert len(payload["singular_points"]) == 3
    assert all(len(row["trace_parameters"]) == 2 for row in payload["components"])
    validate(payload, "curve_report")


def test_verify_passes(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "verify", "--p", "2", "--q", "3", "--g-max", "4", "--format", "json")
    payload = json.loads(out)

    assert code == cli.EXIT_OK
    assert payload["passed"] is True
    assert payload["fault_injected"] is False
    assert [row["name"] for row in payload["checks"]][-1] == "integrality"
    validate(payload, "verify_report")


def test_verify_detects_fault(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, err = run(capsys, "verify", "--p", "2", "--q", "3", "--g-max", "4", "--inject-fault")

    assert code == cli.EXIT_FAILURE
    assert "overall: FAIL" in out
    assert "(fault injected)" in out
    assert "Fault injection enabled" in err


def test_verify_custom_registry(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    registry = tmp_path / "checks.yaml"
    registry.write_text("- torusverlinde.knots.checks:check_hessian\n", encoding="utf-8")
    code, out, _ = run(capsys, "verify", "--p", "3", "--q", "5", "--checks", str(registry), "--format", "csv")

    assert code == cli.EXIT_OK
    assert out.splitlines()[0] == "check,passed,checked,failures"
    assert out.splitlines()[1].startswith("hessian,True,")

    registry.write_text("- nowhere:nothing\n", encoding="utf-8")
    code, _, _ = run(capsys, "verify", "--p", "3", "--q", "5", "--checks", str(registry))
    assert code == cli.EXIT_INVALID


def test_scan(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, _ = run(capsys, "scan", "--p-max", "3", "--q-max", "5", "--g-max", "3", "--format", "json")
    payload = json.loads(out)

    assert code == cli.EXIT_OK
    assert [(row["p"], row["q"]) for row in payload["rows"]] == [(2, 3), (2, 5), (3, 4), (3, 5)]
    assert payload["rows"][1]["values"] == ["1", "2", "5", "15"]
    assert payload["passed"] is True
    validate(payload, "scan_report")


def test_scan_with_workers_matches_serial(capsys: pytest.CaptureFixture[str]) -> None:
    _, serial, _ = run(capsys, "scan", "--p-max", "3", "--q-max", "7", "--g-max", "3", "--format", "csv")
    code, parallel, _ = run(capsys, "scan", "--p-max", "3", "--q-max", "7", "--g-max", "3", "--format", "csv", "--jobs", "2")

    assert code == cli.EXIT_OK
    assert parallel == serial


def test_out_directory_is_reproducible(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out_dir = tmp_path / "reports"
    argv = ("torsion", "--p", "2", "--q", "5", "--out", str(out_dir))

    code, out, err = run(capsys, *argv)
    assert code == cli.EXIT_OK
    assert out == ""
    assert "torsion_2_5.json" in err
    first = {path.name: path.read_bytes() for path in out_dir.iterdir()}
    assert set(first) == {"index.json", "torsion_2_5.json", "torsion_2_5.csv"}

    run(capsys, *argv)
    assert {path.name: path.read_bytes() for path in out_dir.iterdir()} == first
    validate(json.loads(first["torsion_2_5.json"]), "torsion_report")


def test_env_output_directory(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("TORUSVERLINDE_OUT", str(tmp_path))
    code, _, _ = run(capsys, "verlinde", "--p", "2", "--q", "3", "--g", "1")

    assert code == cli.EXIT_OK
    assert (tmp_path / "verlinde_2_3_g1.json").exists()
    assert (tmp_path / "verlinde_2_3_g1.csv").read_text(encoding="utf-8").splitlines()[1] == "2,3,1,,2,2,True,1"


def test_cli_module_exposes_every_command() -> None:
    assert set(cli.COMMAND_HANDLERS) == {"torsion", "verify", "verlinde", "curve", "scan"}
    assert callable(cli.main)
    assert cli.build_parser().prog == "torusverlinde"


def test_curve_overflowing_parameters_exit_two(capsys: pytest.CaptureFixture[str]) -> None:
    code, out, err = run(
        capsys, "curve", "--p", "2", "--q", "3", "--t-min=-1e120", "--t-max", "1e120", "--samples", "3", "--format", "csv"
    )

    assert code == cli.EXIT_INVALID
    assert out == ""
    assert "Curve sampling failed" in err


def test_out_directory_below_a_file_exits_two(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    blocker = tmp_path / "plain-file"
    blocker.write_text("x", encoding="utf-8")

    code, out, err = run(capsys, "torsion", "--p", "2", "--q", "3", "--out", str(blocker / "reports"))

    assert code == cli.EXIT_INVALID
    assert out == ""
    assert "Unable to write reports" in err


def test_verbose_run_reports_effective_defaults(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code, _, err = run(capsys, "torsion", "--p", "2", "--q", "3", "--g-max", "2", "--out", str(tmp_path), "--verbose")

    assert code == cli.EXIT_OK
    assert "'g_max': 2" in err
    assert "lists 2 report(s)" in err
