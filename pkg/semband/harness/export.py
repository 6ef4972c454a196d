"""CSV export of regret tables and the JSON provenance sidecar."""

from __future__ import annotations

import csv
import json
import logging
from pathlib import Path

import numpy as np

from semband.harness.config import ExperimentConfig, compute_config_hash
from semband.harness.runner import COLUMNS, RegretTable
from semband.types import ExportError

logger = logging.getLogger("semband.harness")

SIDECAR_SUFFIX = ".config.json"


def export_csv(table: RegretTable, path: str | Path) -> None:
    """Write one row per round; actions as ``node_count``-wide bit strings.

    Floats use ``repr``, the shortest text that reads back to the same value.
    """
    path = Path(path)
    width = table.node_count
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(COLUMNS)
            for inst, rep, t, action, reward, regret, cum in table.rows():
                writer.writerow(
                    [
                        inst,
                        rep,
                        t,
                        format(action, f"0{width}b"),
                        repr(reward),
                        repr(regret),
                        repr(cum),
                    ]
                )
    except OSError as e:
        raise ExportError(f"Cannot write CSV ({e.strerror})", path=str(path)) from e
    logger.info("Wrote %d rows to %s", len(table), path)


def read_csv(path: str | Path) -> RegretTable:
    """Read a file written by ``export_csv`` back into a table."""
    path = Path(path)
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            rows = list(reader)
    except OSError as e:
        raise ExportError(f"Cannot read CSV ({e.strerror})", path=str(path)) from e
    if header is None or tuple(header) != COLUMNS:
        raise ExportError("Unexpected CSV header", path=str(path))
    if not rows:
        return RegretTable.empty(0)

    try:
        width = len(rows[0][3])
        return RegretTable(
            node_count=width,
            instance_id=np.array([int(r[0]) for r in rows], dtype=np.int64),
            rep_id=np.array([int(r[1]) for r in rows], dtype=np.int64),
            t=np.array([int(r[2]) for r in rows], dtype=np.int64),
            action=np.array([int(r[3], 2) for r in rows], dtype=np.int64),
            reward=np.array([float(r[4]) for r in rows]),
            inst_regret=np.array([float(r[5]) for r in rows]),
            cum_regret=np.array([float(r[6]) for r in rows]),
        )
    except (ValueError, IndexError) as e:
        raise ExportError(f"Malformed CSV row ({e})", path=str(path)) from e


def sidecar_path(csv_path: str | Path) -> Path:
    path = Path(csv_path)
    return path.with_name(path.name + SIDECAR_SUFFIX)


def write_sidecar(config: ExperimentConfig, csv_path: str | Path) -> Path:
    """Echo the resolved config and its hash next to the CSV."""
    target = sidecar_path(csv_path)
    document = {
        "label": config.label,
        "config_hash": compute_config_hash(config),
        "config": config.to_dict(),
    }
    try:
        target.write_text(
            json.dumps(document, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    except OSError as e:
        raise ExportError(
            f"Cannot write sidecar ({e.strerror})", path=str(target)
        ) from e
    return target
