"""sweep command for CLI."""

from __future__ import annotations

import csv
import dataclasses
from pathlib import Path

from semband.cli.formatting import format_float, print_table
from semband.harness.config import apply_overrides, resolve_output_path
from semband.harness.sweep import SweepRow, load_sweep_dir, sweep
from semband.types import ExportError

SUMMARY_COLUMNS = ("label", "horizon", "runs", "mean", "stderr", "instance_stderr")


def _write_summary(rows: list[SweepRow], path: Path) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(SUMMARY_COLUMNS)
            for row in rows:
                values = dataclasses.astuple(row)
                writer.writerow(
                    [repr(v) if isinstance(v, float) else v for v in values]
                )
    except OSError as e:
        raise ExportError(f"Cannot write summary ({e.strerror})", path=str(path)) from e


def sweep_command(
    directory: str,
    out: str | None = None,
    workers: int | None = None,
) -> None:
    """Run every config in ``directory`` and print one summary row each."""
    configs = [apply_overrides(c, workers=workers) for c in load_sweep_dir(directory)]
    rows = sweep(configs)

    print_table(
        ["Config", "T", "Runs", "Mean regret", "SE (runs)", "SE (instances)"],
        [
            [
                row.label,
                str(row.horizon),
                str(row.runs),
                format_float(row.mean),
                format_float(row.stderr),
                format_float(row.instance_stderr),
            ]
            for row in rows
        ],
        title=f"Sweep over {directory}",
    )
    if out is not None:
        path = resolve_output_path(out)
        _write_summary(rows, path)
        print(f"Summary written to {path}")
