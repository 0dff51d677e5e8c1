"""Tests for the check registry loader."""

from __future__ import annotations

from pathlib import Path

import pytest

from torusverlinde.knots.checks import DEFAULT_CHECKS
from torusverlinde.tools.lib import check_loader


def write_check_module(tmp_path: Path, module_name: str = "demo_check") -> None:
    module_file = tmp_path / f"{module_name}.py"
    module_file.write_text(
        "from torusverlinde.knots.checks import CheckResult\n"
        "def always(ctx):\n"
        "    result = CheckResult('always')\n"
        "    result.expect(True, 'never')\n"
        "    return result\n",
        encoding="utf-8",
    )


def test_committed_registry_matches_defaults() -> None:
    assert check_loader.load_check_registry() == DEFAULT_CHECKS


def test_load_check_registry_success(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    write_check_module(tmp_path)
    monkeypatch.syspath_prepend(str(tmp_path))
    registry_file = tmp_path / "checks.yaml"
    registry_file.write_text("- demo_check:always\n", encoding="utf-8")
    monkeypatch.setattr(check_loader, "CHECKS_FILE", registry_file)

    checks = check_loader.load_check_registry()

    assert len(checks) == 1
    assert checks[0](None).passed


@pytest.mark.parametrize(
    "content",
    [
        "{bad: value}\n",
        "[]\n",
        "- ''\n",
        "- torusverlinde.knots.checks\n",
        "- torusverlinde.knots.missing:check_all\n",
        "- torusverlinde.knots.checks:check_nothing\n",
        "- torusverlinde.knots.checks:COMPOSITION_DEGREE_LIMIT\n",
    ],
)
def test_load_check_registry_invalid_entry(tmp_path: Path, monkeypatch: pytest.MonkeyPatch, content: str) -> None:
    registry_file = tmp_path / "checks.yaml"
    registry_file.write_text(content, encoding="utf-8")
    monkeypatch.setattr(check_loader, "CHECKS_FILE", registry_file)

    with pytest.raises(check_loader.CheckRegistryError):
        check_loader.load_check_registry()


def test_missing_registry(tmp_path: Path) -> None:
    with pytest.raises(check_loader.CheckRegistryError):
        check_loader.load_check_registry(tmp_path / "absent.yaml")
