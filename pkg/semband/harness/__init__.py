"""Experiment orchestration: configs, graph families, replications and export."""

from semband.harness.config import (
    ExperimentConfig,
    GraphConfig,
    RunConfig,
    apply_overrides,
    compute_config_hash,
    load_config,
    parse_config_text,
    resolve_output_path,
)
from semband.harness.export import export_csv, read_csv, sidecar_path, write_sidecar
from semband.harness.generators import (
    GeneratedGraph,
    build_graph,
    gen_enhanced_parallel,
    gen_hierarchical,
)
from semband.harness.runner import (
    RegretTable,
    prepare_instances,
    run_experiment,
    run_experiment_async,
    run_replication,
)
from semband.harness.sweep import SweepRow, load_sweep_dir, summarize, sweep

__all__ = [
    "ExperimentConfig",
    "GeneratedGraph",
    "GraphConfig",
    "RegretTable",
    "RunConfig",
    "SweepRow",
    "apply_overrides",
    "build_graph",
    "compute_config_hash",
    "export_csv",
    "gen_enhanced_parallel",
    "gen_hierarchical",
    "load_config",
    "load_sweep_dir",
    "parse_config_text",
    "prepare_instances",
    "read_csv",
    "resolve_output_path",
    "run_experiment",
    "run_experiment_async",
    "run_replication",
    "sidecar_path",
    "summarize",
    "sweep",
    "write_sidecar",
]
