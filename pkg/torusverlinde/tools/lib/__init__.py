"""Shared utilities for the torusverlinde CLI."""

from __future__ import annotations

from .check_loader import CheckRegistryError, load_check_registry
from .config_loader import ConfigError, RunConfig, RunDefaults, load_base_config, resolve_output_dir
from .report_store import ReportStore, ReportStoreError

__all__ = [
    "CheckRegistryError",
    "ConfigError",
    "ReportStore",
    "ReportStoreError",
    "RunConfig",
    "RunDefaults",
    "load_base_config",
    "load_check_registry",
    "resolve_output_dir",
]
