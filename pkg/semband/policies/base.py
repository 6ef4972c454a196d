from __future__ import annotations

from collections.abc import Sequence
from typing import Protocol, runtime_checkable

import numpy as np

from semband.environment.params import SemParameters
from semband.estimation.bank import EstimatorBank
from semband.estimation.node_estimator import Array
from semband.sem.actions import InterventionAction
from semband.sem.dag import DagStructure
from semband.types import ConfigError, ContractViolation


@runtime_checkable
class PolicyProtocol(Protocol):
    """Structural contract shared by every bandit agent."""

    name: str

    def choose(self, t: int) -> InterventionAction: ...

    def observe(self, action: InterventionAction, x: Array) -> None: ...


class Policy:
    """Base class enforcing that ``observe`` follows each ``choose`` exactly once.

    Subclasses implement ``_choose`` and ``_observe``.
    """

    name = "policy"

    def __init__(self, arms: Sequence[InterventionAction]) -> None:
        if not arms:
            raise ConfigError("A policy needs at least one arm")
        self.arms: list[InterventionAction] = sorted(arms)
        self._pending: InterventionAction | None = None

    def choose(self, t: int) -> InterventionAction:
        if self._pending is not None:
            raise ContractViolation(
                f"{self.name}: choose({t}) called before observing {self._pending}"
            )
        action = self._choose(t)
        self._pending = action
        return action

    def observe(self, action: InterventionAction, x: Array) -> None:
        if self._pending is None or action != self._pending:
            raise ContractViolation(
                f"{self.name}: observe({action}) does not match the chosen arm "
                f"{self._pending}"
            )
        self._pending = None
        self._observe(action, x)

    def _choose(self, t: int) -> InterventionAction:
        raise NotImplementedError

    def _observe(self, action: InterventionAction, x: Array) -> None:
        raise NotImplementedError


def best_arm(arms: Sequence[InterventionAction], values: Array) -> InterventionAction:
    """Arm with the largest value; ties go to the lowest bitmask whatever the order."""
    top = np.flatnonzero(values == np.max(values))
    return min((arms[int(k)] for k in top), key=lambda arm: arm.mask)


def learned_nodes(dag: DagStructure, known: SemParameters | None) -> list[int]:
    """Every node, or only the reward node when the other columns are known."""
    if known is None:
        return list(range(dag.node_count))
    return [dag.reward_node]


def pinned_matrices(
    dag: DagStructure, known: SemParameters | None
) -> tuple[Array, Array]:
    """Starting ``(B, B*)`` before learned columns are filled in.

    Zeros when nothing is known; otherwise the true weights with the reward
    column cleared.
    """
    n = dag.node_count
    if known is None:
        return np.zeros((n, n)), np.zeros((n, n))
    obs = known.obs_weights.copy()
    inter = known.int_weights.copy()
    obs[:, dag.reward_node] = 0.0
    inter[:, dag.reward_node] = 0.0
    return obs, inter


def make_bank(dag: DagStructure, known: SemParameters | None) -> EstimatorBank:
    return EstimatorBank(dag, learned_nodes(dag, known))
