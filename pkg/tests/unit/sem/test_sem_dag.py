"""Unit tests for DAG validation, relabeling and graph statistics."""

from __future__ import annotations

import numpy as np
import pytest

from semband.sem.dag import graph_stats, validate_dag
from semband.types import BadIndex, CycleDetected, GraphError, RewardHasChild


class TestValidateDag:
    def test_chain_keeps_order(self) -> None:
        dag = validate_dag([[], [0]], 1)
        assert dag.topo_order == (0, 1)
        assert dag.parents == ((), (0,))
        assert dag.labels == (1, 2)
        assert dag.reward_node == 1

    def test_reward_is_relabeled_last(self) -> None:
        # original reward node 0 has parents 1 and 2
        dag = validate_dag([[1, 2], [], [1]], 0)
        assert dag.topo_order == (1, 2, 0)
        assert dag.labels[dag.reward_node] == 1
        assert dag.parents[dag.reward_node] == (0, 1)

    def test_ties_break_by_smallest_original_index(self) -> None:
        dag = validate_dag([[], [], [], [0, 1, 2]], 3)
        assert dag.topo_order == (0, 1, 2, 3)

    def test_parents_always_precede_children(self) -> None:
        rng = np.random.default_rng(3)
        for _ in range(20):
            n = int(rng.integers(2, 9))
            perm = rng.permutation(n - 1)
            raw: list[list[int]] = [[] for _ in range(n)]
            for a in range(n - 1):
                for b in range(a + 1, n - 1):
                    if rng.random() < 0.4:
                        raw[int(perm[b])].append(int(perm[a]))
            raw[n - 1] = list(range(n - 1))
            dag = validate_dag(raw, n - 1)
            assert not np.tril(dag.support).any()

    def test_cycle_is_named(self) -> None:
        with pytest.raises(CycleDetected, match=r"1 -> 2 -> 1"):
            validate_dag([[1], [0], [0]], 2)

    @pytest.mark.parametrize(
        "parents, reward, error",
        [
            pytest.param([[], [5]], 1, BadIndex, id="parent_out_of_range"),
            pytest.param([[], [1]], 1, BadIndex, id="self_loop"),
            pytest.param([[], [0, 0]], 1, BadIndex, id="duplicate_parent"),
            pytest.param([[], [0]], 4, BadIndex, id="reward_out_of_range"),
            pytest.param([[1], []], 1, RewardHasChild, id="reward_has_child"),
            pytest.param([], 0, BadIndex, id="empty_graph"),
        ],
    )
    def test_rejects_malformed_input(
        self, parents: list[list[int]], reward: int, error: type[GraphError]
    ) -> None:
        with pytest.raises(error):
            validate_dag(parents, reward)

    def test_error_carries_node(self) -> None:
        with pytest.raises(RewardHasChild) as info:
            validate_dag([[2], [], []], 2)
        assert info.value.node == 0


class TestDagProperties:
    def test_support_mask(self) -> None:
        dag = validate_dag([[], [0], [0, 1]], 2)
        expected = np.array(
            [[False, True, True], [False, False, True], [False, False, False]]
        )
        np.testing.assert_array_equal(dag.support, expected)
        assert not dag.support.flags.writeable

    def test_children_and_edge_count(self) -> None:
        dag = validate_dag([[], [0], [0, 1]], 2)
        assert dag.children == ((1, 2), (2,), ())
        assert dag.edge_count == 3

    def test_reward_ancestors_skip_unconnected_nodes(self) -> None:
        dag = validate_dag([[], [0], [], [1]], 3)
        assert dag.reward_ancestors == (0, 1, 3)


class TestGraphStats:
    @pytest.mark.parametrize(
        "parents, reward, degree, longest",
        [
            pytest.param([[]], 0, 0, 0, id="single_node"),
            pytest.param([[], [0]], 1, 1, 1, id="two_chain"),
            pytest.param([[], [0], [1]], 2, 1, 2, id="three_chain"),
            pytest.param([[], [], [], [0, 1, 2]], 3, 3, 1, id="parallel"),
            pytest.param([[], [0], [0, 1]], 2, 2, 2, id="triangle"),
        ],
    )
    def test_degree_and_longest_path(
        self, parents: list[list[int]], reward: int, degree: int, longest: int
    ) -> None:
        stats = graph_stats(validate_dag(parents, reward))
        assert stats.max_degree == degree
        assert stats.longest_path == longest
