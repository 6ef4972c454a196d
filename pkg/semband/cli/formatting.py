"""Shared formatting helpers for CLI commands."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any


def format_float(value: float, digits: int = 6) -> str:
    return f"{value:.{digits}g}"


def format_mean_stderr(mean: float, stderr: float) -> str:
    return f"{mean:.2f} ± {stderr:.2f}"


def print_key_values(title: str, pairs: Sequence[tuple[str, Any]]) -> None:
    """Labeled key-value block; rich when available, plain text otherwise."""
    try:
        from rich.console import Console
        from rich.table import Table

        use_rich = True
    except ImportError:
        use_rich = False

    rendered = [
        (key, format_float(v) if isinstance(v, float) else str(v)) for key, v in pairs
    ]
    if use_rich:
        table = Table(title=title, show_header=False, title_justify="left")
        table.add_column("key", style="cyan")
        table.add_column("value", justify="right")
        for key, value in rendered:
            table.add_row(key, value)
        Console().print(table)
        return

    print(title)
    print("-" * len(title))
    width = max((len(key) for key, _ in rendered), default=0)
    for key, value in rendered:
        print(f"{key:<{width}}  {value}")


def print_table(
    headers: Sequence[str], rows: Sequence[Sequence[str]], title: str | None = None
) -> None:
    try:
        from rich.console import Console
        from rich.table import Table

        use_rich = True
    except ImportError:
        use_rich = False

    if use_rich:
        table = Table(title=title, show_header=True, header_style="bold magenta")
        table.add_column(headers[0], style="green")
        for header in headers[1:]:
            table.add_column(header, justify="right")
        for row in rows:
            table.add_row(*row)
        Console().print(table)
        return

    widths = [
        max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(headers)
    ]
    if title:
        print(title)
    print("  ".join(h.ljust(w) for h, w in zip(headers, widths, strict=True)))
    print("-" * (sum(widths) + 2 * (len(widths) - 1)))
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True)))
