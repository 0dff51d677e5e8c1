"""Load the invariant checks run by ``verify`` from a YAML registry."""

from __future__ import annotations

import importlib
from pathlib import Path
from typing import Any, Callable, List, Optional, Tuple

import yaml

TOOLS_DIR = Path(__file__).resolve().parents[1]
CHECKS_FILE = TOOLS_DIR / "checks.yaml"


class CheckRegistryError(RuntimeError):
    """Raised when the check registry cannot be loaded."""


def load_check_registry(registry_path: Optional[Path] = None) -> List[Callable[..., Any]]:
    """Resolve every ``module:attr`` entry of the registry into a callable."""

    path = registry_path or CHECKS_FILE
    if not path.exists():
        raise CheckRegistryError(f"Check registry not found: {path}")
    return [_resolve_check(entry) for entry in _parse_registry_file(path)]


def _parse_registry_file(path: Path) -> List[str]:
    with path.open("r", encoding="utf-8") as handle:
        try:
            data = yaml.safe_load(handle) or []
        except yaml.YAMLError as exc:
            raise CheckRegistryError(f"Unable to parse {path}: {exc}") from exc
    if not isinstance(data, list):
        raise CheckRegistryError("Check registry must be a list of module paths.")
    entries: List[str] = []
    for item in data:
        if not isinstance(item, str) or not item.strip():
            raise CheckRegistryError("Check registry entries must be non-empty strings.")
        entries.append(item.strip())
    if not entries:
        raise CheckRegistryError(f"Check registry {path} is empty.")
    return entries


def _resolve_check(entry: str) -> Callable[..., Any]:
    module_path, attr = _split_entry(entry)
    if not attr:
        raise CheckRegistryError(f"Check '{entry}' must name a function as module:attr")
    try:
        module = importlib.import_module(module_path)
    except ModuleNotFoundError as exc:
        raise CheckRegistryError(f"Unable to import module '{module_path}'") from exc
    try:
        check = getattr(module, attr)
    except AttributeError as exc:
        raise CheckRegistryError(f"Module '{module_path}' has no attribute '{attr}'") from exc
    if not callable(check):
        raise CheckRegistryError(f"Check '{entry}' is not callable.")
    return check


def _split_entry(entry: str) -> Tuple[str, Optional[str]]:
    if ":" in entry:
        module_path, attr = entry.split(":", 1)
        return module_path.strip(), attr.strip() or None
    return entry, None
