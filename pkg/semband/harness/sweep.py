"""Run several experiment configs and summarize their final regret."""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from semband.harness.config import ExperimentConfig, load_config
from semband.harness.runner import FloatArray, RegretTable, run_experiment
from semband.observability import ObserverProtocol
from semband.types import ConfigError

logger = logging.getLogger("semband.harness")


@dataclass(frozen=True, slots=True)
class SweepRow:
    """Final cumulative regret of one config.

    ``stderr`` is taken over every ``(instance, rep)`` run, ``instance_stderr``
    over the per-instance means.
    """

    label: str
    horizon: int
    runs: int
    mean: float
    stderr: float
    instance_stderr: float


def _stderr(values: FloatArray) -> float:
    if values.size < 2:
        return 0.0
    return float(np.std(values, ddof=1) / math.sqrt(values.size))


def summarize(label: str, table: RegretTable) -> SweepRow:
    finals = table.final_cum_regret()
    instance_means = np.array([v.mean() for v in table.final_by_instance().values()])
    return SweepRow(
        label=label,
        horizon=table.horizon,
        runs=int(finals.size),
        mean=float(finals.mean()),
        stderr=_stderr(finals),
        instance_stderr=_stderr(instance_means),
    )


def sweep(
    configs: Sequence[ExperimentConfig],
    observers: Sequence[ObserverProtocol] = (),
) -> list[SweepRow]:
    """One summary row per config, in input order.

    Raises:
        ConfigError: if the configs do not share a horizon.
    """
    horizons = {config.run.horizon for config in configs}
    if len(horizons) > 1:
        raise ConfigError(f"Sweep configs must share a horizon, got {sorted(horizons)}")
    rows = []
    for config in configs:
        logger.info("Sweep: running %s", config.label)
        rows.append(summarize(config.label, run_experiment(config, observers)))
    return rows


def load_sweep_dir(directory: str | Path) -> list[ExperimentConfig]:
    """Every ``*.ini`` config in ``directory``, sorted by file name."""
    path = Path(directory)
    if not path.is_dir():
        raise ConfigError(f"Not a directory: {path}")
    files = sorted(path.glob("*.ini"))
    if not files:
        raise ConfigError(f"No *.ini configs in {path}")
    return [load_config(file) for file in files]
