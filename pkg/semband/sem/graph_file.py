"""Plain-text graph format.

::

    # comment
    N <count> reward <idx>
    <j> <i> <w_obs> <w_int>      one line per edge, 1-based, j in Pa(i)
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from semband.sem.dag import DagStructure, validate_dag
from semband.sem.weights import WeightMatrix
from semband.types import BadIndex, ConfigError


@dataclass(frozen=True)
class GraphFile:
    """A parsed graph file, weights already relabeled to internal order."""

    dag: DagStructure
    obs_weights: WeightMatrix
    int_weights: WeightMatrix


def parse_graph_text(text: str, source: str = "<string>") -> GraphFile:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, float, float]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 4 or tokens[0] != "N" or tokens[2] != "reward":
                raise ConfigError(
                    f"{source}:{lineno}: expected 'N <count> reward <idx>', "
                    f"got {line!r}"
                )
            try:
                header = (int(tokens[1]), int(tokens[3]))
            except ValueError:
                raise ConfigError(f"{source}:{lineno}: non-integer header") from None
            continue
        if len(tokens) != 4:
            raise ConfigError(f"{source}:{lineno}: expected 'j i w_obs w_int'")
        try:
            edges.append(
                (int(tokens[0]), int(tokens[1]), float(tokens[2]), float(tokens[3]))
            )
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: malformed edge {line!r}") from None

    if header is None:
        raise ConfigError(f"{source}: missing 'N <count> reward <idx>' header")
    n, reward = header
    if n < 1:
        raise ConfigError(f"{source}: node count must be positive")

    raw_parents: list[list[int]] = [[] for _ in range(n)]
    for j, i, _, _ in edges:
        if not (1 <= j <= n and 1 <= i <= n):
            raise BadIndex(f"{source}: edge {j} -> {i} outside 1..{n}")
        raw_parents[i - 1].append(j - 1)
    dag = validate_dag(raw_parents, reward - 1)

    position = {original: internal for internal, original in enumerate(dag.topo_order)}
    obs = np.zeros((n, n))
    inter = np.zeros((n, n))
    for j, i, w_obs, w_int in edges:
        obs[position[j - 1], position[i - 1]] = w_obs
        inter[position[j - 1], position[i - 1]] = w_int
    return GraphFile(dag=dag, obs_weights=obs, int_weights=inter)


def read_graph_file(path: str | Path) -> GraphFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError(f"Cannot read graph file {path}: {e}") from e
    return parse_graph_text(text, source=str(path))


def format_graph_text(
    dag: DagStructure,
    obs_weights: WeightMatrix,
    int_weights: WeightMatrix,
    comment: str | None = None,
) -> str:
    """Render a graph in original 1-based labels."""
    labels = dag.labels
    reward_label = labels[dag.reward_node]
    lines: list[str] = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"N {dag.node_count} reward {reward_label}")
    edges = sorted(
        (labels[j], labels[i], float(obs_weights[j, i]), float(int_weights[j, i]))
        for i, ps in enumerate(dag.parents)
        for j in ps
    )
    lines.extend(f"{j} {i} {w!r} {w_star!r}" for j, i, w, w_star in edges)
    return "\n".join(lines) + "\n"
