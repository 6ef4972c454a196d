"""LinSEM-UCB with a coordinate-ascent solver for the per-arm UCB.

For fixed other columns, ``<f(Theta), nu>`` is affine in column ``i``: every
directed path visits ``i`` at most once. Its linear coefficient on parent
``j`` is ``G_i(Theta) * m_j(Theta)``, with ``G = f(Theta)`` and ``m`` the node
means of a noiseless forward pass driven by ``nu``. Each column step is
therefore a linear maximization over that column's confidence set, solved in
closed form by ``ellipsoid_linear_max``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from semband.environment.params import SemParameters
from semband.estimation.bank import EstimatorBank
from semband.estimation.confidence import (
    ConfidenceSpec,
    confidence_radius,
    ellipsoid_linear_max,
    project_to_ball,
)
from semband.estimation.node_estimator import Array
from semband.policies.base import Policy, best_arm, make_bank, pinned_matrices
from semband.sem.actions import InterventionAction
from semband.sem.dag import DagStructure, graph_stats
from semband.sem.weights import reward_coefficients
from semband.types import ConfigError

logger = logging.getLogger("semband.policies.ucb")


@dataclass(frozen=True, slots=True)
class CoordinateAscentSettings:
    max_sweeps: int = 50
    restarts: int = 4
    improvement_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.max_sweeps < 1:
            raise ConfigError("max_sweeps must be at least 1")
        if self.restarts < 0:
            raise ConfigError("restarts must be non-negative")
        if self.improvement_tol <= 0:
            raise ConfigError("improvement_tol must be positive")


@dataclass
class AscentResult:
    value: float
    theta: Array
    sweeps: int
    trace: list[float] = field(default_factory=list)


@dataclass
class UcbWorkspace:
    """Estimator bank, solver settings and the last round's per-arm UCB values."""

    bank: EstimatorBank
    settings: CoordinateAscentSettings = field(
        default_factory=CoordinateAscentSettings
    )
    base: tuple[Array, Array] | None = None
    ucb_values: Array | None = None


def node_means(dag: DagStructure, theta: Array, nu: Array) -> Array:
    """Node means of ``X = Theta^T X + nu``, evaluated in topological order."""
    m = np.array(nu, dtype=np.float64, copy=True)
    for node, parents in enumerate(dag.parents):
        if parents:
            ps = list(parents)
            m[node] += theta[ps, node] @ m[ps]
    return m


def column_coefficients(
    dag: DagStructure, theta: Array, nu: Array, node: int, longest_path: int
) -> Array:
    """Coefficient of ``<f(Theta), nu>`` in column ``node``, over its parents."""
    g = reward_coefficients(theta, longest_path)
    m = node_means(dag, theta, nu)
    return g[node] * m[list(dag.parents[node])]


def _objective(theta: Array, nu: Array, longest_path: int) -> float:
    return float(reward_coefficients(theta, longest_path) @ nu)


def _arm_matrix(ws: UcbWorkspace, action: InterventionAction) -> Array:
    n = ws.bank.dag.node_count
    if ws.base is None:
        return np.zeros((n, n))
    obs, inter = ws.base
    cols = np.zeros(n, dtype=bool)
    for node in action:
        cols[node] = True
    return np.where(cols[np.newaxis, :], inter, obs)


def coordinate_ascent(
    ws: UcbWorkspace,
    action: InterventionAction,
    nu: Array,
    spec: ConfidenceSpec,
    start: Array,
    longest_path: int,
) -> AscentResult:
    """Cyclic column-wise ascent from a feasible ``start``.

    A column step is accepted only if it does not lower the objective.
    """
    dag = ws.bank.dag
    theta = start.copy()
    active = [
        node
        for node in dag.reward_ancestors
        if node in ws.bank.obs and dag.parents[node]
    ]
    value = _objective(theta, nu, longest_path)
    trace = [value]
    sweeps = 0
    for sweeps in range(1, ws.settings.max_sweeps + 1):
        for node in active:
            ps = list(dag.parents[node])
            coef = column_coefficients(dag, theta, nu, node, longest_path)
            est = ws.bank.for_action(node, action)
            _, point = ellipsoid_linear_max(est, coef, spec)
            if float(coef @ point) >= float(coef @ theta[ps, node]):
                theta[ps, node] = point
        new_value = _objective(theta, nu, longest_path)
        trace.append(new_value)
        improvement = new_value - value
        value = new_value
        if improvement < ws.settings.improvement_tol:
            break
    return AscentResult(value=value, theta=theta, sweeps=sweeps, trace=trace)


def _center_start(
    ws: UcbWorkspace, action: InterventionAction, spec: ConfidenceSpec
) -> Array:
    theta = _arm_matrix(ws, action)
    dag = ws.bank.dag
    for node in ws.bank.nodes:
        ps = list(dag.parents[node])
        if ps:
            est = ws.bank.for_action(node, action)
            theta[ps, node] = project_to_ball(est.estimate, spec.norm_cap)
    return theta


def _random_start(
    ws: UcbWorkspace,
    action: InterventionAction,
    spec: ConfidenceSpec,
    rng: np.random.Generator,
) -> Array:
    theta = _arm_matrix(ws, action)
    dag = ws.bank.dag
    for node in ws.bank.nodes:
        ps = list(dag.parents[node])
        if ps:
            est = ws.bank.for_action(node, action)
            shrunk = ConfidenceSpec(spec.beta * float(rng.random()), spec.norm_cap)
            _, point = ellipsoid_linear_max(est, rng.standard_normal(len(ps)), shrunk)
            theta[ps, node] = point
    return theta


def arm_ucb(
    ws: UcbWorkspace,
    action: InterventionAction,
    nu: Array,
    spec: ConfidenceSpec,
    rng: np.random.Generator,
    longest_path: int | None = None,
) -> AscentResult:
    """Approximate UCB of one arm: best of a center start and random restarts."""
    depth = longest_path
    if depth is None:
        depth = graph_stats(ws.bank.dag).longest_path
    best = coordinate_ascent(
        ws, action, nu, spec, _center_start(ws, action, spec), depth
    )
    for _ in range(ws.settings.restarts):
        result = coordinate_ascent(
            ws, action, nu, spec, _random_start(ws, action, spec, rng), depth
        )
        if result.value > best.value:
            best = result
    return best


def linsem_ucb_choose(
    ws: UcbWorkspace,
    arms: Sequence[InterventionAction],
    nu: Array,
    spec: ConfidenceSpec,
    rng: np.random.Generator,
) -> InterventionAction:
    """Arm with the largest approximate UCB; ties go to the lowest bitmask."""
    depth = graph_stats(ws.bank.dag).longest_path
    values = np.array(
        [arm_ucb(ws, arm, nu, spec, rng, depth).value for arm in arms]
    )
    ws.ucb_values = values
    return best_arm(arms, values)


class LinSemUcbPolicy(Policy):
    """LinSEM-UCB; with ``known`` set, only the reward column is learned."""

    name = "linsem_ucb"

    def __init__(
        self,
        dag: DagStructure,
        arms: Sequence[InterventionAction],
        nu: Array,
        rng: np.random.Generator,
        horizon: int,
        m: float = 10.0,
        beta: float | None = None,
        settings: CoordinateAscentSettings | None = None,
        known: SemParameters | None = None,
        adaptive_m: bool = False,
    ) -> None:
        super().__init__(arms)
        self.dag = dag
        self.nu = np.asarray(nu, dtype=np.float64)
        self.rng = rng
        self.horizon = horizon
        self.m = m
        self.adaptive_m = adaptive_m
        self._fixed_beta = beta
        self._degree = max(graph_stats(dag).max_degree, 1)
        self._running_max = 0.0
        self.workspace = UcbWorkspace(
            bank=make_bank(dag, known),
            settings=settings or CoordinateAscentSettings(),
            base=None if known is None else pinned_matrices(dag, known),
        )

    @property
    def bank(self) -> EstimatorBank:
        return self.workspace.bank

    @property
    def last_ucb_values(self) -> Array | None:
        return self.workspace.ucb_values

    def current_beta(self) -> float:
        if self._fixed_beta is not None:
            return self._fixed_beta
        m = self._running_max if self.adaptive_m and self._running_max > 0 else self.m
        return confidence_radius(self.dag.node_count, self.horizon, self._degree, m)

    def _choose(self, t: int) -> InterventionAction:
        spec = ConfidenceSpec(beta=self.current_beta())
        action = linsem_ucb_choose(self.workspace, self.arms, self.nu, spec, self.rng)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(
                "round %d: beta=%.4f chose %s ucb=%s",
                t,
                spec.beta,
                action.bitstring(self.dag.node_count),
                self.workspace.ucb_values,
            )
        return action

    def _observe(self, action: InterventionAction, x: Array) -> None:
        self._running_max = max(self._running_max, float(math.sqrt(float(x @ x))))
        self.bank.observe(action, x, self.nu)
