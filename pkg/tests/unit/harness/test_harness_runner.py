"""Unit tests for instance preparation, replications and regret tables."""

from __future__ import annotations

import dataclasses
from pathlib import Path

import numpy as np
import pytest

from semband.harness.config import load_config
from semband.harness.runner import (
    RegretTable,
    ReplicationTask,
    prepare_instances,
    run_experiment,
    run_replication,
)
from semband.types import ConfigError, GraphFamily, InterventionalRule, PolicyKind
from tests.factories import make_config


def _table(instance: int, rep: int, regrets: list[float]) -> RegretTable:
    n = len(regrets)
    values = np.array(regrets)
    return RegretTable(
        node_count=3,
        instance_id=np.full(n, instance, dtype=np.int64),
        rep_id=np.full(n, rep, dtype=np.int64),
        t=np.arange(1, n + 1, dtype=np.int64),
        action=np.zeros(n, dtype=np.int64),
        reward=np.zeros(n),
        inst_regret=values,
        cum_regret=np.cumsum(values),
    )


class TestRegretTable:
    def test_concat_sorts_rows(self) -> None:
        table = RegretTable.concat(
            [
                _table(1, 0, [1.0, 0.0]),
                _table(0, 1, [0.5, 0.5]),
                _table(0, 0, [2.0, 1.0]),
            ]
        )
        assert table.run_keys() == [(0, 0), (0, 1), (1, 0)]
        assert [row[:3] for row in table.rows()][:2] == [(0, 0, 1), (0, 0, 2)]
        np.testing.assert_allclose(table.final_cum_regret(), [3.0, 1.0, 1.0])

    def test_aggregates(self) -> None:
        table = RegretTable.concat(
            [
                _table(0, 0, [1.0, 1.0]),
                _table(0, 1, [0.0, 1.0]),
                _table(1, 0, [0.0, 0.0]),
            ]
        )
        assert table.horizon == 2
        np.testing.assert_allclose(table.mean_curve(), [1 / 3, 1.0])
        by_instance = table.final_by_instance()
        np.testing.assert_allclose(by_instance[0], [2.0, 1.0])
        np.testing.assert_allclose(by_instance[1], [0.0])

    def test_empty(self) -> None:
        table = RegretTable.empty(4)
        assert len(table) == 0
        assert table.horizon == 0

    def test_concat_nothing(self) -> None:
        with pytest.raises(ConfigError):
            RegretTable.concat([])


class TestPrepareInstances:
    def test_ids_and_oracle(self) -> None:
        specs = prepare_instances(make_config(instances=3))
        assert [s.instance_id for s in specs] == [0, 1, 2]
        for spec in specs:
            assert spec.optimal_mean == pytest.approx(spec.means.max())
            assert spec.optimal in spec.arms
            assert len(spec.arms) == 4

    def test_structures_share_one_id_range(self) -> None:
        config = make_config(family=GraphFamily.ENHANCED_PARALLEL, nodes=5)
        config = dataclasses.replace(
            config, graph=dataclasses.replace(config.graph, structures=3)
        )
        specs = prepare_instances(config)
        assert [s.instance_id for s in specs] == list(range(6))

    def test_same_seed_same_instances(self) -> None:
        a = prepare_instances(make_config(seed=3))
        b = prepare_instances(make_config(seed=3))
        for x, y in zip(a, b, strict=True):
            np.testing.assert_array_equal(x.params.obs_weights, y.params.obs_weights)

    def test_file_interventional_weights_kept(self, tmp_path: Path) -> None:
        (tmp_path / "g.txt").write_text("N 2 reward 2\n1 2 0.5 0.9\n")
        cfg = tmp_path / "exp.ini"
        cfg.write_text(
            "[graph]\nfamily = file\npath = g.txt\n"
            "[prior]\ninstance_jitter_sd = 0\n"
            "[run]\nhorizon = 5\ninstances = 2\nreps = 1\n"
        )
        config = load_config(cfg)
        assert config.prior.interventional_rule is InterventionalRule.NEGATE
        for spec in prepare_instances(config):
            assert spec.params.obs_weights[0, 1] == 0.5
            assert spec.params.int_weights[0, 1] == 0.9

    def test_file_interventional_weights_jitter_on_their_own(
        self, tmp_path: Path
    ) -> None:
        (tmp_path / "g.txt").write_text("N 2 reward 2\n1 2 0.5 0.9\n")
        cfg = tmp_path / "exp.ini"
        cfg.write_text(
            "[graph]\nfamily = file\npath = g.txt\n"
            "[prior]\ninstance_jitter_sd = 0.01\n"
            "[run]\nhorizon = 5\ninstances = 3\nreps = 1\n"
        )
        for spec in prepare_instances(load_config(cfg)):
            assert spec.params.int_weights[0, 1] == pytest.approx(0.9, abs=0.1)
            assert spec.params.obs_weights[0, 1] == pytest.approx(0.5, abs=0.1)


class TestRunReplication:
    @pytest.mark.parametrize(
        "kind",
        [
            pytest.param(PolicyKind.LINSEM_TS_GAUSSIAN, id="ts"),
            pytest.param(PolicyKind.BASELINE_UCB, id="baseline"),
            pytest.param(PolicyKind.LINSEM_UCB, id="ucb"),
            pytest.param(PolicyKind.KNOWN_DIST, id="known"),
        ],
    )
    def test_regret_columns(self, kind: PolicyKind) -> None:
        config = make_config(kind=kind, horizon=12, restarts=1, max_sweeps=5)
        spec = prepare_instances(config)[0]
        table = run_replication(
            ReplicationTask(spec, 0, config.policy, config.run.horizon, config.run.seed)
        )
        assert len(table) == 12
        assert np.all(table.inst_regret >= 0.0)
        assert np.all(np.diff(table.cum_regret) >= 0.0)
        np.testing.assert_allclose(table.cum_regret, np.cumsum(table.inst_regret))
        masks = {arm.mask for arm in spec.arms}
        assert set(table.action.tolist()) <= masks


def test_run_experiment_shape() -> None:
    config = make_config(horizon=10, instances=2, reps=3)
    table = run_experiment(config)
    assert len(table) == 2 * 3 * 10
    assert table.run_keys() == [(i, r) for i in range(2) for r in range(3)]
    assert table.mean_curve().shape == (10,)
