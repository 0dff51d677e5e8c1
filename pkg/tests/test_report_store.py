"""ReportStore unit tests."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from torusverlinde.tools.lib.report_store import ReportStore, ReportStoreError


def test_store_initializes_index(tmp_path: Path) -> None:
    store = ReportStore(base_dir=tmp_path / "out")

    assert (tmp_path / "out").is_dir()
    assert json.loads((tmp_path / "out" / "index.json").read_text()) == []
    assert store.list_reports() == []


def test_write_reports(tmp_path: Path) -> None:
    store = ReportStore(base_dir=tmp_path)
    json_path = store.write_json("verify_2_3.json", {"passed": True, "checks": []})
    csv_path = store.write_csv("verify_2_3.csv", ("check", "passed"), [("geometry", True), ("hessian", False)])

    assert json.loads(json_path.read_text(encoding="utf-8")) == {"passed": True, "checks": []}
    assert csv_path.read_text(encoding="utf-8") == "check,passed\ngeometry,True\nhessian,False\n"
    assert store.list_reports() == ["verify_2_3.csv", "verify_2_3.json"]


def test_rewrite_is_byte_identical(tmp_path: Path) -> None:
    store = ReportStore(base_dir=tmp_path)
    path = store.write_json("torsion_2_3.json", {"p": 2, "q": 3})
    first = path.read_bytes()
    index = store.index_file.read_bytes()

    ReportStore(base_dir=tmp_path).write_json("torsion_2_3.json", {"p": 2, "q": 3})

    assert path.read_bytes() == first
    assert store.index_file.read_bytes() == index


def test_malformed_index(tmp_path: Path) -> None:
    store = ReportStore(base_dir=tmp_path)
    store.index_file.write_text("{}", encoding="utf-8")

    with pytest.raises(ReportStoreError):
        store.list_reports()

    store.index_file.write_text("not json", encoding="utf-8")
    with pytest.raises(ReportStoreError):
        store.list_reports()


def test_unwritable_directory(tmp_path: Path) -> None:
    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")

    with pytest.raises(ReportStoreError):
        ReportStore(base_dir=blocker / "out")


def test_write_failures_become_store_errors(tmp_path: Path) -> None:
    store = ReportStore(base_dir=tmp_path)
    (tmp_path / "taken.json").mkdir()
    (tmp_path / "taken.csv").mkdir()

    with pytest.raises(ReportStoreError):
        store.write_json("taken.json", {"p": 2})
    with pytest.raises(ReportStoreError):
        store.write_csv("taken.csv", ("p",), [(2,)])
    assert store.list_reports() == []
