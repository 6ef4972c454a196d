"""SEM instances: noise, weights, and the prior that generates them."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from semband.sem.dag import DagStructure, GraphStats, graph_stats
from semband.sem.weights import Vector, WeightMatrix, check_support
from semband.types import ConfigError, InterventionalRule, NoiseKind

logger = logging.getLogger("semband.environment")


@dataclass(frozen=True, eq=False)
class NoiseModel:
    """Independent per-node noise ``eps_i ~ N(mean_i, variance_i)``.

    In truncated mode the whole noise vector is resampled until its Euclidean
    norm is within ``bound``.
    """

    mean: Vector
    variance: Vector
    kind: NoiseKind = NoiseKind.GAUSSIAN
    bound: float | None = None

    def __post_init__(self) -> None:
        if self.mean.shape != self.variance.shape or self.mean.ndim != 1:
            raise ConfigError("Noise mean and variance must be vectors of equal length")
        if np.any(self.variance <= 0):
            raise ConfigError("Noise variances must be positive")
        if self.kind is NoiseKind.TRUNCATED_GAUSSIAN and (
            self.bound is None or self.bound <= 0
        ):
            raise ConfigError("Truncated noise requires a positive bound")

    @classmethod
    def constant(
        cls,
        node_count: int,
        mean: float = 1.0,
        variance: float = 1.0,
        kind: NoiseKind = NoiseKind.GAUSSIAN,
        bound: float | None = None,
    ) -> NoiseModel:
        return cls(
            mean=np.full(node_count, float(mean)),
            variance=np.full(node_count, float(variance)),
            kind=kind,
            bound=bound,
        )

    @property
    def sd(self) -> Vector:
        return np.sqrt(self.variance)


@dataclass(frozen=True, eq=False)
class SemParameters:
    """``W = [B B*]`` plus noise, over a validated DAG."""

    dag: DagStructure
    obs_weights: WeightMatrix
    int_weights: WeightMatrix
    noise: NoiseModel

    def __post_init__(self) -> None:
        check_support(self.dag, self.obs_weights, "B")
        check_support(self.dag, self.int_weights, "B*")
        if self.noise.mean.shape != (self.dag.node_count,):
            raise ConfigError(
                f"Noise mean has length {self.noise.mean.shape[0]}, "
                f"expected {self.dag.node_count}"
            )

    @cached_property
    def stats(self) -> GraphStats:
        return graph_stats(self.dag)

    def column_norms(self) -> tuple[Vector, Vector]:
        return (
            np.linalg.norm(self.obs_weights, axis=0),
            np.linalg.norm(self.int_weights, axis=0),
        )

    def satisfies_unit_columns(self, slack: float = 1e-12) -> bool:
        obs, inter = self.column_norms()
        return bool(np.all(obs <= 1 + slack) and np.all(inter <= 1 + slack))


@dataclass(frozen=True, slots=True)
class PriorConfig:
    weight_low: float = 0.25
    weight_high: float = 1.0
    interventional_rule: InterventionalRule = InterventionalRule.NEGATE
    instance_jitter_sd: float = 0.05
    normalize_columns: bool = False
    noise_mean: float = 1.0
    noise_variance: float = 1.0
    noise_kind: NoiseKind = NoiseKind.GAUSSIAN
    noise_bound: float | None = None

    def __post_init__(self) -> None:
        if not 0 < self.weight_low <= self.weight_high:
            raise ConfigError(
                f"Need 0 < weight_low <= weight_high, got "
                f"{self.weight_low}, {self.weight_high}"
            )
        if self.instance_jitter_sd < 0:
            raise ConfigError("instance_jitter_sd must be non-negative")

    def noise_model(self, node_count: int) -> NoiseModel:
        return NoiseModel.constant(
            node_count,
            mean=self.noise_mean,
            variance=self.noise_variance,
            kind=self.noise_kind,
            bound=self.noise_bound,
        )


def _signed_uniform(
    count: int, low: float, high: float, rng: np.random.Generator
) -> Vector:
    magnitudes = rng.uniform(low, high, size=count)
    signs = np.where(rng.random(count) < 0.5, -1.0, 1.0)
    return signs * magnitudes


def _normalize(matrix: WeightMatrix) -> WeightMatrix:
    norms = np.linalg.norm(matrix, axis=0)
    scale = np.where(norms > 1.0, norms, 1.0)
    return matrix / scale[np.newaxis, :]


def sample_prior_center(
    dag: DagStructure, prior: PriorConfig, rng: np.random.Generator
) -> SemParameters:
    """Nonzero weights uniform on ``[-high, -low] U [low, high]``."""
    n = dag.node_count
    support = dag.support
    count = int(support.sum())

    obs = np.zeros((n, n))
    obs[support] = _signed_uniform(count, prior.weight_low, prior.weight_high, rng)
    if prior.interventional_rule is InterventionalRule.NEGATE:
        inter = -obs
    else:
        inter = np.zeros((n, n))
        inter[support] = _signed_uniform(
            count, prior.weight_low, prior.weight_high, rng
        )
    return SemParameters(
        dag=dag, obs_weights=obs, int_weights=inter, noise=prior.noise_model(n)
    )


def sample_sem_instance(
    dag: DagStructure,
    prior: PriorConfig,
    rng: np.random.Generator,
    center: SemParameters | None = None,
) -> SemParameters:
    """Draw a true instance as ``center + N(0, jitter_sd^2)`` on every edge.

    When ``center`` is omitted a fresh prior center is drawn from ``rng`` first.
    Under the negate rule ``B* = -B`` holds exactly after jitter and
    normalization.
    """
    if center is None:
        center = sample_prior_center(dag, prior, rng)
    support = dag.support
    count = int(support.sum())
    sd = prior.instance_jitter_sd

    obs = center.obs_weights.copy()
    obs[support] += sd * rng.standard_normal(count)
    if prior.normalize_columns:
        obs = _normalize(obs)

    if prior.interventional_rule is InterventionalRule.NEGATE:
        inter = -obs
    else:
        inter = center.int_weights.copy()
        inter[support] += sd * rng.standard_normal(count)
        if prior.normalize_columns:
            inter = _normalize(inter)

    params = SemParameters(
        dag=dag, obs_weights=obs, int_weights=inter, noise=center.noise
    )
    if not prior.normalize_columns and not params.satisfies_unit_columns():
        logger.debug("Sampled instance has weight columns with norm above 1")
    return params
