"""The ``2N`` per-node estimators and their on-disk checkpoint."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from pathlib import Path

import numpy as np

from semband.estimation.node_estimator import Array, NodeEstimator
from semband.sem.actions import InterventionAction
from semband.sem.dag import DagStructure
from semband.types import ConfigError, ExportError

logger = logging.getLogger("semband.estimation")

CHECKPOINT_VERSION = 1


class EstimatorBank:
    """One observational and one interventional estimator per learned node.

    ``nodes`` restricts learning to a subset (the known-distribution variant
    learns only the reward node); by default every node is learned.
    """

    def __init__(self, dag: DagStructure, nodes: Iterable[int] | None = None) -> None:
        self.dag = dag
        self.nodes: tuple[int, ...] = (
            tuple(range(dag.node_count)) if nodes is None else tuple(sorted(set(nodes)))
        )
        self.obs: dict[int, NodeEstimator] = {
            i: NodeEstimator.fresh(dag.parents[i]) for i in self.nodes
        }
        self.int: dict[int, NodeEstimator] = {
            i: NodeEstimator.fresh(dag.parents[i]) for i in self.nodes
        }
        self.rounds = 0

    def estimator(self, node: int, intervened: bool) -> NodeEstimator:
        return self.int[node] if intervened else self.obs[node]

    def for_action(self, node: int, action: InterventionAction) -> NodeEstimator:
        return self.estimator(node, node in action)

    def observe(self, action: InterventionAction, x: Array, nu: Array) -> None:
        """Route each node's sample to its interventional or observational estimator."""
        for node in self.nodes:
            est = self.for_action(node, action)
            est.update(x[list(est.parent_idx)], float(x[node]), float(nu[node]))
        self.rounds += 1

    def estimates(self) -> tuple[Array, Array]:
        """Current ``B(t)`` and ``B*(t)`` as dense ``N x N`` matrices."""
        n = self.dag.node_count
        obs = np.zeros((n, n))
        inter = np.zeros((n, n))
        for node in self.nodes:
            ps = list(self.dag.parents[node])
            obs[ps, node] = self.obs[node].estimate
            inter[ps, node] = self.int[node].estimate
        return obs, inter

    def save(self, path: str | Path) -> None:
        """Write counts, Gram matrices and response vectors to a ``.npz`` file."""
        arrays: dict[str, Array] = {
            "format_version": np.array([CHECKPOINT_VERSION]),
            "node_count": np.array([self.dag.node_count]),
            "nodes": np.array(self.nodes, dtype=np.int64),
            "rounds": np.array([self.rounds]),
        }
        for node in self.nodes:
            parents = np.array(self.dag.parents[node], dtype=np.int64)
            arrays[f"parents_{node}"] = parents
            for kind, est in (("obs", self.obs[node]), ("int", self.int[node])):
                arrays[f"{kind}_{node}_gram"] = est.gram
                arrays[f"{kind}_{node}_resp"] = est.resp
                arrays[f"{kind}_{node}_count"] = np.array([est.count])
        try:
            with open(path, "wb") as f:
                np.savez(f, **arrays)
        except OSError as e:
            raise ExportError(f"Cannot write checkpoint ({e})", path=str(path)) from e
        logger.debug(
            "Saved estimator checkpoint for %d nodes to %s", len(self.nodes), path
        )

    @classmethod
    def load(cls, path: str | Path, dag: DagStructure) -> EstimatorBank:
        """Restore a bank saved by ``save``; the DAG must match the checkpoint."""
        try:
            data = np.load(path)
        except OSError as e:
            raise ExportError(f"Cannot read checkpoint ({e})", path=str(path)) from e
        with data:
            version = int(data["format_version"][0])
            if version != CHECKPOINT_VERSION:
                raise ConfigError(
                    f"Checkpoint version {version} is not supported "
                    f"(expected {CHECKPOINT_VERSION})"
                )
            if int(data["node_count"][0]) != dag.node_count:
                raise ConfigError("Checkpoint node count does not match the graph")
            nodes = [int(n) for n in data["nodes"]]
            bank = cls(dag, nodes)
            bank.rounds = int(data["rounds"][0])
            for node in nodes:
                if tuple(int(p) for p in data[f"parents_{node}"]) != dag.parents[node]:
                    raise ConfigError(f"Checkpoint parents of node {node + 1} differ")
                for kind, store in (("obs", bank.obs), ("int", bank.int)):
                    store[node] = NodeEstimator.from_state(
                        dag.parents[node],
                        data[f"{kind}_{node}_gram"],
                        data[f"{kind}_{node}_resp"],
                        int(data[f"{kind}_{node}_count"][0]),
                    )
        return bank
