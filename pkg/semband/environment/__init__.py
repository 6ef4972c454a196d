"""Stochastic SEM environment: instances, forward sampling and regret oracles."""

from semband.environment.oracle import arm_means, instant_regret, optimal_action
from semband.environment.params import (
    NoiseModel,
    PriorConfig,
    SemParameters,
    sample_prior_center,
    sample_sem_instance,
)
from semband.environment.sampling import (
    forward_pass,
    sample_noise,
    sample_observation,
    sample_observations,
    stream_rng,
)

__all__ = [
    "NoiseModel",
    "PriorConfig",
    "SemParameters",
    "arm_means",
    "forward_pass",
    "instant_regret",
    "optimal_action",
    "sample_noise",
    "sample_observation",
    "sample_observations",
    "sample_prior_center",
    "sample_sem_instance",
    "stream_rng",
]
