"""Forward sampling of ``X = B_a^T X + eps`` and reproducible random streams."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from semband.environment.params import NoiseModel, SemParameters
from semband.sem.actions import InterventionAction
from semband.sem.weights import Vector, assemble_intervention_matrix
from semband.types import NoiseKind, SamplingError, StreamPurpose

MAX_REJECTION_ROUNDS = 1000


def stream_rng(
    base_seed: int,
    instance: int = 0,
    replication: int = 0,
    purpose: StreamPurpose = StreamPurpose.ENVIRONMENT,
) -> np.random.Generator:
    """Independent generator keyed by ``(base_seed, instance, replication, purpose)``.

    Streams depend only on the key, never on scheduling, so serial and
    parallel executions draw identical numbers.
    """
    entropy = [int(base_seed), int(instance), int(replication), purpose.value]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def sample_noise(
    noise: NoiseModel, rng: np.random.Generator, size: int | None = None
) -> npt.NDArray[np.float64]:
    """Draw ``size`` noise vectors (or one when ``size`` is None)."""
    count = 1 if size is None else size
    n = noise.mean.shape[0]
    draws = noise.mean + noise.sd * rng.standard_normal((count, n))

    if noise.kind is NoiseKind.TRUNCATED_GAUSSIAN:
        assert noise.bound is not None
        accepted = np.linalg.norm(draws, axis=1) <= noise.bound
        for _ in range(MAX_REJECTION_ROUNDS):
            if accepted.all():
                break
            missing = np.flatnonzero(~accepted)
            redraw = noise.mean + noise.sd * rng.standard_normal((missing.size, n))
            draws[missing] = redraw
            accepted[missing] = np.linalg.norm(redraw, axis=1) <= noise.bound
        else:
            raise SamplingError(
                f"Noise bound {noise.bound} rejected draws for "
                f"{MAX_REJECTION_ROUNDS} rounds; it is too tight for the noise mean"
            )
    return draws[0] if size is None else draws


def forward_pass(
    params: SemParameters,
    matrix: npt.NDArray[np.float64],
    eps: npt.NDArray[np.float64],
) -> npt.NDArray[np.float64]:
    """Evaluate the SEM in topological order for noise rows ``eps`` (..., N)."""
    x = np.array(eps, dtype=np.float64, copy=True)
    for node, parents in enumerate(params.dag.parents):
        if parents:
            ps = list(parents)
            x[..., node] += x[..., ps] @ matrix[ps, node]
    return x


def sample_observation(
    params: SemParameters,
    action: InterventionAction,
    rng: np.random.Generator,
    eps: Vector | None = None,
) -> Vector:
    """One draw of ``X`` under ``action``; the reward is the last component.

    ``eps`` injects a fixed noise vector instead of drawing one.
    """
    matrix = assemble_intervention_matrix(params, action)
    noise = sample_noise(params.noise, rng) if eps is None else eps
    return forward_pass(params, matrix, noise)


def sample_observations(
    params: SemParameters,
    action: InterventionAction,
    rng: np.random.Generator,
    size: int,
) -> npt.NDArray[np.float64]:
    """``size`` independent draws of ``X``, shape ``(size, N)``."""
    matrix = assemble_intervention_matrix(params, action)
    return forward_pass(params, matrix, sample_noise(params.noise, rng, size))
