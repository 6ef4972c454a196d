"""Exact regret oracles by enumerating the arm space."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from semband.environment.params import SemParameters
from semband.sem.actions import InterventionAction
from semband.sem.weights import Vector, reward_coefficients, stack_intervention_matrices
from semband.types import ConfigError


def arm_means(params: SemParameters, arms: Sequence[InterventionAction]) -> Vector:
    """Expected reward of every arm, in the order given."""
    matrices = stack_intervention_matrices(
        params.obs_weights, params.int_weights, list(arms)
    )
    return reward_coefficients(matrices, params.stats) @ params.noise.mean


def optimal_action(
    params: SemParameters, arms: Sequence[InterventionAction]
) -> tuple[InterventionAction, float]:
    """Best arm and its mean; ties go to the lowest bitmask."""
    if not arms:
        raise ConfigError("optimal_action needs at least one arm")
    ordered = sorted(arms)
    means = arm_means(params, ordered)
    best = int(np.argmax(means))
    return ordered[best], float(means[best])


def instant_regret(
    params: SemParameters,
    arms: Sequence[InterventionAction],
    action: InterventionAction,
) -> float:
    """``mu* - mu_a``; never negative since ``mu*`` maximizes over ``arms``."""
    _, best = optimal_action(params, arms)
    means = arm_means(params, [action])
    return max(best - float(means[0]), 0.0)
