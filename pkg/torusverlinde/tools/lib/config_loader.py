"""Configuration helpers for the torusverlinde CLI."""

from __future__ import annotations

import os
import textwrap
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

TOOLS_DIR = Path(__file__).resolve().parents[1]
DEFAULT_CONFIG_PATH = TOOLS_DIR / "config.yaml"
OUTPUT_ENV_VAR = "TORUSVERLINDE_OUT"
OUTPUT_FORMATS = ("json", "csv", "text")
COMMANDS = ("torsion", "verify", "verlinde", "curve", "scan")


class ConfigError(RuntimeError):
    """Raised when the CLI configuration is missing or invalid."""


@dataclass(frozen=True)
class RunDefaults:
    """Committed defaults for every subcommand."""

    g_max: int
    output_format: str
    float_tolerance: float
    samples: int
    t_min: float
    t_max: float
    fusion_max_genus: int
    fusion_max_weight: int
    full_grid_limit: int
    sample_size: int
    seed: int
    jobs: int

    @classmethod
    def from_mapping(cls, payload: Dict[str, Any]) -> "RunDefaults":
        values: Dict[str, Any] = {}
        for spec in fields(cls):
            if spec.name not in payload:
                raise ConfigError(f"Missing required config key: {spec.name}")
            raw = payload[spec.name]
            try:
                values[spec.name] = _coerce(spec.type, raw)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"Invalid value for {spec.name}: {raw!r}") from exc
        defaults = cls(**values)
        defaults.validate()
        return defaults

    def validate(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {', '.join(OUTPUT_FORMATS)}")
        for name in ("g_max", "fusion_max_genus", "fusion_max_weight", "seed"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative")
        for name in ("full_grid_limit", "sample_size", "jobs"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be positive")
        if self.samples < 2:
            raise ConfigError("samples must be at least 2")
        if not self.t_min < self.t_max:
            raise ConfigError("t_min must be smaller than t_max")
        if not self.float_tolerance > 0:
            raise ConfigError("float_tolerance must be positive")

    def to_dict(self) -> Dict[str, Any]:
        return {spec.name: getattr(self, spec.name) for spec in fields(self)}

    def apply_overrides(self, **overrides: Any) -> "RunDefaults":
        updated = replace(self, **{key: value for key, value in overrides.items() if value is not None})
        updated.validate()
        return updated


def _coerce(type_name: Any, raw: Any) -> Any:
    if isinstance(raw, bool):
        raise TypeError("booleans are not accepted here")
    if type_name in ("int", int):
        if isinstance(raw, float) and not raw.is_integer():
            raise ValueError("expected an integer")
        return int(raw)
    if type_name in ("float", float):
        return float(raw)
    return str(raw)


def load_base_config(config_path: Optional[Path] = None) -> RunDefaults:
    """Load and validate the default configuration file."""

    path = config_path or DEFAULT_CONFIG_PATH
    if not path.exists():
        raise ConfigError(
            textwrap.dedent(
                f"""
                Missing required config file: {path}
                Start from the template committed under torusverlinde/tools/config.yaml.
                """
            ).strip()
        )
    with path.open("r", encoding="utf-8") as handle:
        try:
            data = yaml.safe_load(handle) or {}
        except yaml.YAMLError as exc:
            raise ConfigError(f"Unable to parse {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config.yaml must contain a mapping/object at the top level")
    return RunDefaults.from_mapping(data)


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters for one CLI invocation."""

    command: str
    defaults: RunDefaults
    p: Optional[int] = None
    q: Optional[int] = None
    g: Optional[int] = None
    g_max: Optional[int] = None
    punctures: str = ""
    output_format: str = "text"
    out_dir: Optional[Path] = None
    p_max: Optional[int] = None
    q_max: Optional[int] = None
    samples: Optional[int] = None
    t_min: Optional[float] = None
    t_max: Optional[float] = None
    jobs: int = 1
    inject_fault: bool = False
    checks_file: Optional[Path] = None
    verbose: bool = False

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command: {self.command}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}")
        if self.command == "scan":
            for name in ("p_max", "q_max"):
                value = getattr(self, name)
                if value is None or value < 2:
                    raise ConfigError(f"--{name.replace('_', '-')} must be at least 2")
        elif self.p is None or self.q is None:
            raise ConfigError("--p and --q are required")
        if self.g is not None and self.g < 0:
            raise ConfigError("--g must be non-negative")
        if self.g_max is not None and self.g_max < 0:
            raise ConfigError("--g-max must be non-negative")
        if self.samples is not None and self.samples < 2:
            raise ConfigError("--samples must be at least 2")
        if self.t_min is not None and self.t_max is not None and not self.t_min < self.t_max:
            raise ConfigError("--t-min must be smaller than --t-max")
        if self.jobs < 1:
            raise ConfigError("--jobs must be positive")


def resolve_output_dir(flag_value: Optional[str]) -> Optional[Path]:
    """``--out`` wins, then the TORUSVERLINDE_OUT environment variable, else stdout (None)."""

    value = flag_value or os.environ.get(OUTPUT_ENV_VAR)
    if not value:
        return None
    return Path(value).expanduser()
