"""run command for CLI."""

from __future__ import annotations

import sys

from semband.cli.formatting import format_mean_stderr, print_key_values
from semband.harness.config import ExperimentConfig, resolve_output_path
from semband.harness.export import export_csv, write_sidecar
from semband.harness.runner import run_experiment
from semband.harness.sweep import summarize
from semband.observability import EventLogger, ObserverProtocol


def run_command(config: ExperimentConfig, verbose: bool = False) -> None:
    """Run one experiment, write its CSV and sidecar, print the summary."""
    observers: list[ObserverProtocol] = []
    if verbose:
        observers.append(
            EventLogger(
                level="DEBUG",
                sink=EventLogger.stderr_sink(),
                use_colors=sys.stderr.isatty(),
            )
        )

    table = run_experiment(config, observers)
    out = resolve_output_path(config.run.output)
    export_csv(table, out)
    sidecar = write_sidecar(config, out)

    row = summarize(config.label, table)
    print_key_values(
        f"Experiment {config.label}",
        [
            ("policy", config.policy.label),
            ("horizon", row.horizon),
            ("runs", row.runs),
            ("final cum regret (all runs)", format_mean_stderr(row.mean, row.stderr)),
            (
                "final cum regret (instance means)",
                format_mean_stderr(row.mean, row.instance_stderr),
            ),
            ("csv", str(out)),
            ("sidecar", str(sidecar)),
        ],
    )
