"""Flat-file persistence for CLI reports."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Iterable, List, Sequence

INDEX_FILENAME = "index.json"


class ReportStoreError(RuntimeError):
    """Base error for report store failures."""


class ReportStore:
    """Writes JSON/CSV reports into one directory and keeps an index of them.

    The index lists file names only, sorted, so reruns produce identical files.
    Filesystem failures surface as ``ReportStoreError``.
    """

    def __init__(self, base_dir: Path) -> None:
        self.base_dir = base_dir
        self.index_file = self.base_dir / INDEX_FILENAME
        try:
            self.base_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise ReportStoreError(f"Unable to create output directory {self.base_dir}: {exc}") from exc
        if not self.index_file.exists():
            self._write_index([])

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------
    def list_reports(self) -> List[str]:
        return self._read_index()

    def write_json(self, name: str, payload: Any) -> Path:
        path = self.base_dir / name
        self._write_text(path, dumps_json(payload))
        self._register(name)
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        path = self.base_dir / name
        try:
            with path.open("w", encoding="utf-8", newline="") as handle:
                write_csv_rows(handle, header, rows)
        except OSError as exc:
            raise ReportStoreError(f"Unable to write {path}: {exc}") from exc
        self._register(name)
        return path

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------
    def _register(self, name: str) -> None:
        names = self._read_index()
        if name not in names:
            names.append(name)
            self._write_index(sorted(names))

    def _read_index(self) -> List[str]:
        try:
            with self.index_file.open("r", encoding="utf-8") as handle:
                data = json.load(handle)
        except (OSError, ValueError) as exc:
            raise ReportStoreError(f"Unable to read report index {self.index_file}: {exc}") from exc
        if not isinstance(data, list):
            raise ReportStoreError(f"Malformed report index: {self.index_file}")
        return [str(item) for item in data]

    def _write_index(self, names: List[str]) -> None:
        self._write_text(self.index_file, dumps_json(names))

    @staticmethod
    def _write_text(path: Path, text: str) -> None:
        try:
            with path.open("w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise ReportStoreError(f"Unable to write {path}: {exc}") from exc


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def write_csv_rows(handle: Any, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
