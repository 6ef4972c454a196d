from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from semband.estimation.node_estimator import Array, NodeEstimator
from semband.types import ConfigError


@dataclass(frozen=True, slots=True)
class ConfidenceSpec:
    """Confidence set ``{theta : ||theta - b||_V <= beta, ||theta|| <= norm_cap}``."""

    beta: float
    norm_cap: float = 1.0

    def __post_init__(self) -> None:
        if self.beta < 0:
            raise ConfigError(f"beta must be non-negative, got {self.beta}")
        if self.norm_cap <= 0:
            raise ConfigError(f"norm_cap must be positive, got {self.norm_cap}")


def confidence_radius(N: int, T: int, d: int, m: float) -> float:
    """``beta_T = 1 + sqrt(2 log(2NT) + d log(1 + m^2 T / d))``."""
    if N < 1 or T < 1 or d < 1 or m < 0:
        raise ConfigError(
            f"confidence_radius needs positive N, T, d and m >= 0, got "
            f"N={N}, T={T}, d={d}, m={m}"
        )
    return 1.0 + math.sqrt(2.0 * math.log(2 * N * T) + d * math.log1p(m * m * T / d))


def project_to_ball(point: Array, cap: float = 1.0) -> Array:
    norm = float(np.linalg.norm(point))
    return point if norm <= cap else point * (cap / norm)


def _segment_to_sphere(start: Array, end: Array, cap: float) -> Array:
    """Point on ``[start, end]`` with norm ``cap``; ``start`` lies inside the ball."""
    d = end - start
    a = float(d @ d)
    if a == 0.0:
        return start
    b = 2.0 * float(start @ d)
    c = float(start @ start) - cap * cap
    s = (-b + math.sqrt(max(b * b - 4.0 * a * c, 0.0))) / (2.0 * a)
    s = min(max(s, 0.0), 1.0)
    return start + s * d


def ellipsoid_linear_max(
    est: NodeEstimator, direction: Array, spec: ConfidenceSpec
) -> tuple[float, Array]:
    """Maximize ``<w, theta>`` over the confidence ellipsoid, capped to the ball.

    The ellipsoid maximizer is ``b + beta V^{-1} w / ||w||_{V^{-1}}``. When it
    leaves the ball, the point where the segment from the projected center
    meets the sphere is returned instead; that point stays feasible and its
    value is a lower bound on the true constrained maximum. A zero direction
    returns the projected center with value 0.
    """
    w = np.asarray(direction, dtype=np.float64)
    center = project_to_ball(est.estimate, spec.norm_cap)
    if not np.any(w):
        return 0.0, center.copy()

    v_inv_w = est.gram_inv @ w
    scale = math.sqrt(max(float(w @ v_inv_w), 0.0))
    if scale == 0.0:
        return float(w @ center), center.copy()
    theta = est.estimate + spec.beta * v_inv_w / scale

    if float(np.linalg.norm(theta)) > spec.norm_cap:
        theta = _segment_to_sphere(center, theta, spec.norm_cap)
    return float(w @ theta), theta


def in_confidence_set(
    est: NodeEstimator, theta: Array, spec: ConfidenceSpec, tol: float = 1e-9
) -> bool:
    inside_ellipsoid = est.v_norm(theta - est.estimate) <= spec.beta + tol
    inside_ball = float(np.linalg.norm(theta)) <= spec.norm_cap + tol
    return inside_ellipsoid and inside_ball
