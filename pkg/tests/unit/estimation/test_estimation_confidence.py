"""Unit tests for confidence radii and ellipsoid maximization."""

from __future__ import annotations

import numpy as np
import pytest

from semband.estimation.confidence import (
    ConfidenceSpec,
    confidence_radius,
    ellipsoid_linear_max,
    in_confidence_set,
    project_to_ball,
)
from semband.estimation.node_estimator import NodeEstimator
from semband.types import ConfigError


def _estimator(gram: list[list[float]], estimate: list[float]) -> NodeEstimator:
    gram_arr = np.array(gram)
    resp = gram_arr @ np.array(estimate)
    return NodeEstimator.from_state(tuple(range(len(estimate))), gram_arr, resp)


class TestConfidenceRadius:
    def test_reference_value(self) -> None:
        assert confidence_radius(7, 5000, 3, 10.0) == pytest.approx(8.64, abs=0.01)

    def test_grows_with_horizon(self) -> None:
        short = confidence_radius(5, 100, 2, 10.0)
        assert confidence_radius(5, 10_000, 2, 10.0) > short

    def test_at_least_one(self) -> None:
        assert confidence_radius(1, 1, 1, 0.0) >= 1.0

    @pytest.mark.parametrize(
        "args",
        [
            pytest.param((0, 10, 1, 1.0), id="N"),
            pytest.param((2, 0, 1, 1.0), id="T"),
            pytest.param((2, 10, 0, 1.0), id="d"),
            pytest.param((2, 10, 1, -1.0), id="m"),
        ],
    )
    def test_invalid(self, args: tuple[int, int, int, float]) -> None:
        with pytest.raises(ConfigError):
            confidence_radius(*args)


class TestConfidenceSpec:
    def test_negative_beta(self) -> None:
        with pytest.raises(ConfigError):
            ConfidenceSpec(beta=-0.1)

    def test_nonpositive_cap(self) -> None:
        with pytest.raises(ConfigError):
            ConfidenceSpec(beta=1.0, norm_cap=0.0)


class TestProjectToBall:
    def test_inside_unchanged(self) -> None:
        point = np.array([0.3, 0.4])
        assert project_to_ball(point) is point

    def test_outside_scaled(self) -> None:
        np.testing.assert_allclose(project_to_ball(np.array([3.0, 4.0])), [0.6, 0.8])


class TestEllipsoidLinearMax:
    def test_interior_closed_form(self) -> None:
        est = _estimator([[100.0, 0.0], [0.0, 400.0]], [0.1, 0.2])
        spec = ConfidenceSpec(beta=1.0)
        w = np.array([1.0, 1.0])
        value, theta = ellipsoid_linear_max(est, w, spec)
        v_inv_w = np.array([0.01, 0.0025])
        expected = np.array([0.1, 0.2]) + v_inv_w / np.sqrt(w @ v_inv_w)
        np.testing.assert_allclose(theta, expected)
        assert value == pytest.approx(float(w @ expected))
        assert in_confidence_set(est, theta, spec)

    def test_beats_random_feasible_points(self) -> None:
        rng = np.random.default_rng(3)
        est = _estimator([[50.0, 5.0], [5.0, 80.0]], [0.2, -0.1])
        spec = ConfidenceSpec(beta=2.0)
        w = np.array([0.4, -1.3])
        value, _ = ellipsoid_linear_max(est, w, spec)
        chol = np.linalg.cholesky(np.linalg.inv(est.gram))
        for _ in range(500):
            u = rng.normal(size=2)
            u *= rng.random() / np.linalg.norm(u)
            point = est.estimate + spec.beta * chol @ u
            assert in_confidence_set(est, point, spec)
            assert float(w @ point) <= value + 1e-12

    def test_capped_to_unit_ball(self) -> None:
        est = _estimator([[1.0, 0.0], [0.0, 1.0]], [0.0, 0.0])
        w = np.array([1.0, 0.0])
        value, theta = ellipsoid_linear_max(est, w, ConfidenceSpec(3.0))
        assert np.linalg.norm(theta) == pytest.approx(1.0)
        assert value == pytest.approx(1.0)

    def test_zero_direction_returns_projected_center(self) -> None:
        est = _estimator([[1.0]], [2.0])
        value, theta = ellipsoid_linear_max(est, np.zeros(1), ConfidenceSpec(1.0))
        assert value == 0.0
        np.testing.assert_allclose(theta, [1.0])

    def test_zero_beta_returns_estimate(self) -> None:
        est = _estimator([[2.0, 0.0], [0.0, 2.0]], [0.3, 0.1])
        _, theta = ellipsoid_linear_max(est, np.array([1.0, 2.0]), ConfidenceSpec(0.0))
        np.testing.assert_allclose(theta, [0.3, 0.1])


class TestInConfidenceSet:
    def test_membership(self) -> None:
        est = _estimator([[4.0]], [0.2])
        spec = ConfidenceSpec(beta=1.0)
        assert in_confidence_set(est, np.array([0.6]), spec)
        assert not in_confidence_set(est, np.array([0.8]), spec)
        assert not in_confidence_set(_estimator([[0.01]], [0.0]), np.array([1.5]), spec)
