"""Seeded experiments reproduce exactly, serially or across processes."""

from __future__ import annotations

import numpy as np
import pytest

from semband.harness.config import ExperimentConfig, apply_overrides
from semband.harness.runner import RegretTable, run_experiment
from semband.types import GraphFamily, PolicyKind
from tests.factories import make_config


def _assert_same(a: RegretTable, b: RegretTable) -> None:
    assert list(a.rows()) == list(b.rows())


def test_same_seed_same_table(small_config: ExperimentConfig) -> None:
    _assert_same(run_experiment(small_config), run_experiment(small_config))


def test_different_seed_different_table(small_config: ExperimentConfig) -> None:
    other = apply_overrides(small_config, seed=small_config.run.seed + 1)
    a = run_experiment(small_config)
    b = run_experiment(other)
    assert not np.array_equal(a.reward, b.reward)


@pytest.mark.parametrize(
    "kind",
    [
        pytest.param(PolicyKind.LINSEM_TS_GAUSSIAN, id="ts"),
        pytest.param(PolicyKind.LINSEM_UCB, id="ucb"),
    ],
)
def test_serial_matches_parallel(kind: PolicyKind) -> None:
    config = make_config(kind=kind, horizon=8, restarts=1, max_sweeps=5)
    serial = run_experiment(config)
    parallel = run_experiment(apply_overrides(config, workers=2))
    _assert_same(serial, parallel)


def test_reps_do_not_disturb_each_other() -> None:
    """Adding replications leaves the existing ones untouched."""
    few = run_experiment(make_config(horizon=10, instances=1, reps=2))
    many = run_experiment(make_config(horizon=10, instances=1, reps=4))
    head = many.rep_id < 2
    np.testing.assert_array_equal(few.reward, many.reward[head])


def test_parallel_structures_are_reproducible() -> None:
    config = make_config(
        family=GraphFamily.ENHANCED_PARALLEL, nodes=6, horizon=6, instances=1, reps=1
    )
    _assert_same(run_experiment(config), run_experiment(config))
