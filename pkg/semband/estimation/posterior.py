from __future__ import annotations

import numpy as np
import scipy.linalg

from semband.estimation.node_estimator import Array, NodeEstimator
from semband.types import ConfigError


def sample_posterior(
    est: NodeEstimator, sigma: float, rng: np.random.Generator
) -> Array:
    """Draw ``theta ~ N(b, sigma^2 V^{-1})``.

    With ``V = L L^T``, ``L^{-T} z`` has covariance ``V^{-1}``, so one
    triangular solve replaces an explicit inverse square root. One standard
    normal vector is consumed per call even when ``sigma`` is 0.
    """
    if sigma < 0:
        raise ConfigError(f"sigma must be non-negative, got {sigma}")
    z = rng.standard_normal(est.dimension)
    if not est.dimension:
        return np.zeros(0)
    chol = est.cholesky()
    offset = scipy.linalg.solve_triangular(chol, z, lower=True, trans="T")
    return est.estimate + sigma * offset
