"""The two benchmark graph families, plus graphs read from file."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from semband.environment.params import PriorConfig, SemParameters
from semband.environment.sampling import stream_rng
from semband.harness.config import GraphConfig
from semband.sem.actions import InterventionAction, enumerate_actions, mask_of
from semband.sem.dag import DagStructure, validate_dag
from semband.sem.graph_file import read_graph_file
from semband.types import ConfigError, GraphFamily, InterventionalRule, StreamPurpose

logger = logging.getLogger("semband.harness")


@dataclass(frozen=True)
class GeneratedGraph:
    """A DAG with its intervenable set as a bitmask over internal indices.

    ``center`` carries fixed weights when the graph came from a file.
    """

    dag: DagStructure
    intervenable: int
    center: SemParameters | None = None

    @cached_property
    def arms(self) -> list[InterventionAction]:
        return enumerate_actions(self.intervenable)


def _internal_mask(dag: DagStructure, originals: list[int]) -> int:
    position = {original: i for i, original in enumerate(dag.topo_order)}
    return mask_of(position[o] for o in originals)


def gen_hierarchical(d: int, L: int) -> GeneratedGraph:
    """``L`` fully connected layers of ``d`` nodes feeding one reward node.

    Every node outside the first layer and the reward is intervenable.
    """
    if d < 1 or L < 1:
        raise ConfigError(f"Hierarchical graphs need d >= 1 and L >= 1, got {d}, {L}")
    reward = d * L
    parents: list[list[int]] = []
    for layer in range(L):
        prev = list(range((layer - 1) * d, layer * d)) if layer else []
        parents.extend(list(prev) for _ in range(d))
    parents.append(list(range((L - 1) * d, L * d)))
    dag = validate_dag(parents, reward)
    return GeneratedGraph(dag, _internal_mask(dag, list(range(d, reward))))


def gen_enhanced_parallel(N: int, rng: np.random.Generator) -> GeneratedGraph:
    """Parallel bandit with one extra random parent per non-root node."""
    if N < 3:
        raise ConfigError(f"Enhanced parallel graphs need N >= 3, got {N}")
    parents: list[list[int]] = [[]]
    for node in range(1, N - 1):
        parents.append([int(rng.integers(0, node))])
    parents.append(list(range(N - 1)))
    dag = validate_dag(parents, N - 1)
    return GeneratedGraph(dag, _internal_mask(dag, list(range(1, N - 1))))


def load_graph(path: str, prior: PriorConfig) -> GeneratedGraph:
    """Graph and weights from a file; intervenable = non-root, non-reward nodes."""
    parsed = read_graph_file(path)
    dag = parsed.dag
    intervenable = mask_of(i for i in range(dag.node_count - 1) if dag.parents[i])
    center = SemParameters(
        dag=dag,
        obs_weights=parsed.obs_weights,
        int_weights=parsed.int_weights,
        noise=prior.noise_model(dag.node_count),
    )
    return GeneratedGraph(dag, intervenable, center)


def instance_prior(graph: GeneratedGraph, prior: PriorConfig) -> PriorConfig:
    """Prior used to jitter instances around ``graph``'s center.

    A file's ``w_int`` column is kept as given, so file graphs always jitter
    ``B*`` on its own, never as ``-B``.
    """
    if graph.center is None:
        return prior
    return replace(prior, interventional_rule=InterventionalRule.INDEPENDENT)


def build_graph(
    config: GraphConfig, prior: PriorConfig, structure: int = 0
) -> GeneratedGraph:
    """Materialize structure number ``structure`` of the configured family."""
    if config.family is GraphFamily.HIERARCHICAL:
        graph = gen_hierarchical(config.degree, config.layers)
    elif config.family is GraphFamily.ENHANCED_PARALLEL:
        rng = stream_rng(
            config.structure_seed,
            instance=structure,
            purpose=StreamPurpose.STRUCTURE,
        )
        graph = gen_enhanced_parallel(config.nodes, rng)
    else:
        assert config.path is not None
        graph = load_graph(config.path, prior)
    logger.debug(
        "Built %s structure %d: %d nodes, %d edges, %d arms",
        config.family.value,
        structure,
        graph.dag.node_count,
        graph.dag.edge_count,
        1 << bin(graph.intervenable).count("1"),
    )
    return graph
