"""Property-based tests for SEM algebra and the estimators.

Random DAGs, weights and sample streams check the closed forms against
brute-force references.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from semband.estimation.bank import EstimatorBank
from semband.estimation.confidence import (
    ConfidenceSpec,
    ellipsoid_linear_max,
    in_confidence_set,
)
from semband.estimation.node_estimator import NodeEstimator
from semband.harness.config import parse_config_text
from semband.policies.linsem_ucb import UcbWorkspace, coordinate_ascent
from semband.sem.actions import InterventionAction
from semband.sem.dag import graph_stats
from semband.sem.weights import path_enumeration_coefficients, reward_coefficients
from semband.types import ConfigError
from tests.factories import random_params

pytestmark = pytest.mark.slow

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@given(seed=seeds, n=st.integers(min_value=1, max_value=7))
@settings(max_examples=100, deadline=None)
def test_reward_coefficients_match_path_enumeration(seed: int, n: int) -> None:
    params = random_params(np.random.default_rng(seed), n, edge_prob=0.6)
    np.testing.assert_allclose(
        reward_coefficients(params.obs_weights, params.stats),
        path_enumeration_coefficients(params.obs_weights),
        atol=1e-12,
    )


@given(seed=seeds, k=st.integers(min_value=1, max_value=5))
@settings(max_examples=50, deadline=None)
def test_online_inverse_tracks_gram(seed: int, k: int) -> None:
    rng = np.random.default_rng(seed)
    est = NodeEstimator.fresh(tuple(range(k)))
    for _ in range(int(rng.integers(1, 300))):
        est.update(rng.normal(0.0, 3.0, size=k), float(rng.normal()), 0.0)
    np.testing.assert_allclose(est.gram_inv @ est.gram, np.eye(k), atol=1e-7)


@given(
    seed=seeds,
    beta=st.floats(min_value=0.0, max_value=20.0),
    k=st.integers(min_value=1, max_value=4),
)
@settings(max_examples=100, deadline=None)
def test_ellipsoid_max_stays_in_ball(seed: int, beta: float, k: int) -> None:
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(k, k))
    gram = np.eye(k) + a @ a.T
    est = NodeEstimator.from_state(tuple(range(k)), gram, rng.normal(size=k))
    spec = ConfidenceSpec(beta=beta)
    value, theta = ellipsoid_linear_max(est, rng.normal(size=k), spec)
    assert np.linalg.norm(theta) <= 1.0 + 1e-9
    assert np.isfinite(value)
    if np.linalg.norm(est.estimate) <= 1.0:
        assert in_confidence_set(est, theta, spec, tol=1e-7)


@given(seed=seeds, mask=st.integers(min_value=0, max_value=0b1111))
@settings(
    max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
def test_coordinate_ascent_never_decreases(seed: int, mask: int) -> None:
    rng = np.random.default_rng(seed)
    params = random_params(rng, 5, edge_prob=0.7, scale=0.7)
    bank = EstimatorBank(params.dag)
    action = InterventionAction(mask)
    for _ in range(20):
        bank.observe(action, rng.normal(1.0, 1.0, size=5), params.noise.mean)
    result = coordinate_ascent(
        UcbWorkspace(bank=bank),
        action,
        params.noise.mean,
        ConfidenceSpec(beta=float(rng.uniform(0.0, 5.0))),
        np.zeros((5, 5)),
        graph_stats(params.dag).longest_path,
    )
    trace = np.array(result.trace)
    assert np.all(np.diff(trace) >= -1e-12)


@given(text=st.text(max_size=200))
@settings(max_examples=200, deadline=None)
def test_config_parser_only_raises_config_errors(text: str) -> None:
    try:
        parse_config_text(text)
    except ConfigError:
        pass
