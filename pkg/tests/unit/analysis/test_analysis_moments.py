"""Unit tests for interventional second moments and kappa envelopes."""

from __future__ import annotations

import warnings

import numpy as np
import pytest

from semband.analysis.moments import kappa_bounds, second_moment
from semband.environment.params import NoiseModel, SemParameters
from semband.sem.actions import enumerate_actions
from semband.sem.dag import validate_dag
from semband.types import NoiseKind, SingularMomentWarning
from tests.factories import EMPTY, chain_arms, make_chain


def _zero_weights(mean: list[float], variance: list[float]) -> SemParameters:
    dag = validate_dag([[], [], [0, 1]], 2)
    noise = NoiseModel(np.array(mean), np.array(variance))
    return SemParameters(dag, np.zeros((3, 3)), np.zeros((3, 3)), noise)


class TestSecondMoment:
    def test_chain(self) -> None:
        moments = second_moment(make_chain(), EMPTY)
        assert moments.exact
        assert moments.blocks[0].shape == (0, 0)
        np.testing.assert_allclose(moments.blocks[1], [[2.0]])

    def test_zero_matrix_is_noise_moment(self) -> None:
        moments = second_moment(_zero_weights([1.0, 2.0, 0.0], [1.0, 3.0, 1.0]), EMPTY)
        np.testing.assert_allclose(moments.blocks[2], [[2.0, 2.0], [2.0, 7.0]])

    def test_monte_carlo_for_truncated_noise(self) -> None:
        chain = make_chain()
        params = SemParameters(
            chain.dag,
            chain.obs_weights,
            chain.int_weights,
            NoiseModel.constant(
                2, mean=0.0, variance=1.0, kind=NoiseKind.TRUNCATED_GAUSSIAN, bound=50.0
            ),
        )
        moments = second_moment(params, EMPTY, np.random.default_rng(0), samples=20_000)
        assert not moments.exact
        # a bound this loose leaves the Gaussian moments intact
        np.testing.assert_allclose(moments.blocks[1], [[1.0]], atol=0.05)
        np.testing.assert_allclose(moments.full, moments.full.T)


class TestKappaBounds:
    def test_chain(self) -> None:
        assert kappa_bounds(make_chain(), chain_arms()) == pytest.approx((2.0, 2.0))

    def test_root_parents_with_zero_mean(self) -> None:
        params = _zero_weights([0.0, 0.0, 0.0], [1.0, 1.0, 1.0])
        assert kappa_bounds(params, enumerate_actions(0b011)) == pytest.approx(
            (1.0, 1.0)
        )

    def test_no_edges(self) -> None:
        dag = validate_dag([[], []], 1)
        params = SemParameters(
            dag, np.zeros((2, 2)), np.zeros((2, 2)), NoiseModel.constant(2)
        )
        assert kappa_bounds(params, [EMPTY]) == (0.0, 0.0)

    def test_bounded_noise_kappa_max_below_m_squared(self) -> None:
        chain = make_chain()
        bound = 2.0
        params = SemParameters(
            chain.dag,
            chain.obs_weights,
            chain.int_weights,
            NoiseModel.constant(
                2,
                mean=0.5,
                variance=1.0,
                kind=NoiseKind.TRUNCATED_GAUSSIAN,
                bound=bound,
            ),
        )
        _, kappa_max = kappa_bounds(params, chain_arms(), np.random.default_rng(1))
        worst = max(
            np.linalg.norm(np.linalg.inv(np.eye(2) - m.T), 2)
            for m in (chain.obs_weights, chain.int_weights)
        )
        assert kappa_max <= (worst * bound) ** 2

    def test_singular_block_warns(self) -> None:
        dag = validate_dag([[], [0], [0, 1]], 2)
        obs = np.zeros((3, 3))
        obs[0, 1] = 1.0
        noise = NoiseModel(np.zeros(3), np.array([1.0, 1e-14, 1.0]))
        params = SemParameters(dag, obs, obs.copy(), noise)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", SingularMomentWarning)
            low, _ = kappa_bounds(params, [EMPTY])
        assert low <= 1e-12
        assert any(issubclass(w.category, SingularMomentWarning) for w in caught)
