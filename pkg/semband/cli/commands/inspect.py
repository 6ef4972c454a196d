"""inspect command for CLI."""

from __future__ import annotations

import csv
import dataclasses
import warnings
from pathlib import Path
from typing import Any

import numpy as np

from semband.analysis.constants import regret_bound_constants
from semband.analysis.moments import kappa_bounds
from semband.cli.formatting import print_key_values
from semband.environment.sampling import stream_rng
from semband.harness.config import (
    ExperimentConfig,
    apply_overrides,
    compute_config_hash,
    resolve_output_path,
)
from semband.harness.runner import prepare_instances
from semband.sem.dag import graph_stats
from semband.types import ExportError, SingularMomentWarning, StreamPurpose


def _write_pairs(pairs: list[tuple[str, Any]], path: Path) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(["key", "value"])
            for key, value in pairs:
                text = repr(value) if isinstance(value, float) else value
                writer.writerow([key, text])
    except OSError as e:
        raise ExportError(f"Cannot write CSV ({e.strerror})", path=str(path)) from e


def inspect_command(config: ExperimentConfig, csv_path: str | None = None) -> None:
    """Print graph statistics and the theory constants of the first instance."""
    single = apply_overrides(config, instances=1)
    single = dataclasses.replace(
        single, graph=dataclasses.replace(single.graph, structures=1)
    )
    spec = prepare_instances(single)[0]
    params = spec.params
    dag = params.dag
    stats = graph_stats(dag)

    graph_pairs: list[tuple[str, Any]] = [
        ("config hash", compute_config_hash(config)),
        ("nodes", dag.node_count),
        ("edges", dag.edge_count),
        ("max in-degree", stats.max_degree),
        ("longest path", stats.longest_path),
        ("arms", len(spec.arms)),
        ("optimal arm", spec.optimal.bitstring(dag.node_count)),
        ("optimal mean", spec.optimal_mean),
        ("unit weight columns", params.satisfies_unit_columns()),
    ]
    print_key_values(f"Graph of {config.label}", graph_pairs)

    rng = stream_rng(config.run.seed, purpose=StreamPurpose.MONTE_CARLO)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SingularMomentWarning)
        kappa_min, kappa_max = kappa_bounds(params, spec.arms, rng)
    for warning in caught[:3]:
        print(f"Warning: {warning.message}")
    if len(caught) > 3:
        print(f"Warning: {len(caught) - 3} more singular moment blocks")

    constants = regret_bound_constants(
        N=dag.node_count,
        T=config.run.horizon,
        d=max(stats.max_degree, 1),
        L=stats.longest_path,
        m=config.policy.m,
        nu_norm=float(np.linalg.norm(params.noise.mean)),
        kappa_min=kappa_min,
        kappa_max=kappa_max,
    )
    constant_pairs: list[tuple[str, Any]] = list(constants.as_dict().items())
    print_key_values(
        f"Theory constants (T={config.run.horizon}, m={config.policy.m})",
        constant_pairs,
    )

    if csv_path is not None:
        path = resolve_output_path(csv_path)
        _write_pairs(graph_pairs + constant_pairs, path)
        print(f"Constants written to {path}")
