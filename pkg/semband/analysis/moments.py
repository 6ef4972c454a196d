"""Interventional second moments of each node's parents and their envelopes."""

from __future__ import annotations

import logging
import warnings
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from semband.environment.params import SemParameters
from semband.environment.sampling import sample_observations
from semband.sem.actions import InterventionAction
from semband.sem.weights import WeightMatrix, assemble_intervention_matrix
from semband.types import NoiseKind, SingularMomentWarning

logger = logging.getLogger("semband.analysis")

MC_SAMPLES = 10**6
MC_CHUNK = 100_000
SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class SecondMoments:
    """``E[X_Pa(i) X_Pa(i)^T]`` per node; roots get a ``0 x 0`` block.

    ``exact`` is False when the blocks are Monte-Carlo estimates.
    """

    blocks: tuple[WeightMatrix, ...]
    full: WeightMatrix
    exact: bool


def _closed_form(params: SemParameters, matrix: WeightMatrix) -> WeightMatrix:
    n = params.dag.node_count
    a = np.linalg.inv(np.eye(n) - matrix.T)
    nu = params.noise.mean
    noise_moment = np.diag(params.noise.variance) + np.outer(nu, nu)
    return a @ noise_moment @ a.T


def _monte_carlo(
    params: SemParameters,
    action: InterventionAction,
    rng: np.random.Generator,
    samples: int,
) -> WeightMatrix:
    n = params.dag.node_count
    total = np.zeros((n, n))
    drawn = 0
    while drawn < samples:
        size = min(MC_CHUNK, samples - drawn)
        x = sample_observations(params, action, rng, size)
        total += x.T @ x
        drawn += size
    return total / samples


def second_moment(
    params: SemParameters,
    action: InterventionAction,
    rng: np.random.Generator | None = None,
    samples: int = MC_SAMPLES,
) -> SecondMoments:
    """Second moments of every parent vector under ``action``.

    Gaussian noise uses ``A (diag(var) + nu nu^T) A^T`` with
    ``A = (I - B_a^T)^{-1}``. Truncated noise changes the moments, so it is
    estimated from ``samples`` forward draws.
    """
    if params.noise.kind is NoiseKind.TRUNCATED_GAUSSIAN:
        gen = rng if rng is not None else np.random.default_rng()
        full = _monte_carlo(params, action, gen, samples)
        exact = False
        logger.debug("Estimated second moment of %s from %d draws", action, samples)
    else:
        full = _closed_form(params, assemble_intervention_matrix(params, action))
        exact = True
    full = 0.5 * (full + full.T)
    blocks = tuple(
        full[np.ix_(list(parents), list(parents))] for parents in params.dag.parents
    )
    return SecondMoments(blocks=blocks, full=full, exact=exact)


def kappa_bounds(
    params: SemParameters,
    arms: Sequence[InterventionAction],
    rng: np.random.Generator | None = None,
) -> tuple[float, float]:
    """``(kappa_min, kappa_max)`` over every node with parents and every arm.

    Blocks are restricted to the parent coordinates, so these are the
    effective (non-padded) extreme singular values.
    """
    lowest = np.inf
    highest = 0.0
    for action in arms:
        moments = second_moment(params, action, rng)
        for node, block in enumerate(moments.blocks):
            if block.size == 0:
                continue
            eigs = np.linalg.eigvalsh(block)
            low, high = float(eigs[0]), float(eigs[-1])
            if low <= SINGULAR_TOL:
                warnings.warn(
                    f"Second moment of the parents of node "
                    f"{params.dag.labels[node]} under {action} is singular "
                    f"(smallest eigenvalue {low:.3g})",
                    SingularMomentWarning,
                    stacklevel=2,
                )
            lowest = min(lowest, low)
            highest = max(highest, high)
    if not np.isfinite(lowest):
        # no node has parents
        return 0.0, 0.0
    return lowest, highest
