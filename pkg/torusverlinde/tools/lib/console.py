"""Console helpers: coloured diagnostics on stderr, data on stdout."""

from __future__ import annotations

import os
import sys
from datetime import datetime, timezone
from typing import Sequence

ANSI_RESET = "\033[0m"
ANSI_CODES = {
    "pass": "\033[32m",  # green
    "fail": "\033[31m",  # red
    "heading": "\033[34m",
    "log": "\033[90m",  # grey
}


def color_output_enabled() -> bool:
    if os.environ.get("TORUSVERLINDE_FORCE_COLOR") == "1":
        return True
    if os.environ.get("TORUSVERLINDE_NO_COLOR") == "1":
        return False
    stream = getattr(sys, "stderr", None)
    return bool(getattr(stream, "isatty", lambda: False)())


def colorize(text: str, style: str) -> str:
    if not color_output_enabled():
        return text
    prefix = ANSI_CODES.get(style)
    if not prefix:
        return text
    return f"{prefix}{text}{ANSI_RESET}"


def timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def print_log(message: str, style: str = "log") -> None:
    """Timestamped diagnostic line on stderr."""

    print(colorize(f"[{timestamp()}] {message}", style), file=sys.stderr)


def verbose_print(enabled: bool, message: str) -> None:
    if enabled:
        print_log(f"[verbose] {message}")


def print_error(message: str) -> None:
    print(colorize(message, "fail"), file=sys.stderr)


def emit(text: str) -> None:
    """Write report data to stdout; no decoration, no timestamps."""

    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    sys.stdout.flush()


def render_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Fixed-width text table with a ``-+-`` separator line."""

    column_widths = [
        max(len(str(value)) for value in column)
        for column in zip(headers, *(row for row in rows))
    ]
    header_line = " | ".join(header.ljust(column_widths[idx]) for idx, header in enumerate(headers))
    separator = "-+-".join("-" * column_widths[idx] for idx in range(len(headers)))
    lines = [header_line.rstrip(), separator]
    for row in rows:
        lines.append(" | ".join(str(value).ljust(column_widths[idx]) for idx, value in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"
