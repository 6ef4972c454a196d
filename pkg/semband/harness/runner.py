"""Seeded replications of one experiment, aggregated into a regret table.

Every ``(instance, rep)`` pair draws from its own random streams, keyed only
by the base seed and the pair, so serial and parallel runs agree exactly.
"""

from __future__ import annotations

import asyncio
import logging
import time
from collections.abc import Iterator, Sequence
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from semband.environment.oracle import arm_means
from semband.environment.params import (
    SemParameters,
    sample_prior_center,
    sample_sem_instance,
)
from semband.environment.sampling import forward_pass, sample_noise, stream_rng
from semband.harness.config import ExperimentConfig, compute_config_hash
from semband.harness.generators import GeneratedGraph, build_graph, instance_prior
from semband.observability import (
    ObserverProtocol,
    RunEvent,
    RunEventType,
    RunMeta,
    validate_observer,
)
from semband.policies.factory import PolicySettings, build_policy
from semband.sem.actions import InterventionAction
from semband.sem.weights import stack_intervention_matrices
from semband.types import ConfigError, StreamPurpose

logger = logging.getLogger("semband.harness")

IntArray = npt.NDArray[np.int64]
FloatArray = npt.NDArray[np.float64]

COLUMNS = (
    "instance_id",
    "rep_id",
    "t",
    "action",
    "reward",
    "inst_regret",
    "cum_regret",
)


@dataclass(frozen=True, eq=False)
class RegretTable:
    """Columnar per-round log, rows sorted by ``(instance_id, rep_id, t)``.

    ``node_count`` fixes the width of the rendered action bitstrings.
    """

    node_count: int
    instance_id: IntArray
    rep_id: IntArray
    t: IntArray
    action: IntArray
    reward: FloatArray
    inst_regret: FloatArray
    cum_regret: FloatArray

    @classmethod
    def empty(cls, node_count: int) -> RegretTable:
        ints = np.zeros(0, dtype=np.int64)
        floats = np.zeros(0, dtype=np.float64)
        return cls(node_count, ints, ints, ints, ints, floats, floats, floats)

    @classmethod
    def concat(cls, tables: Sequence[RegretTable]) -> RegretTable:
        """Join tables and restore the sorted row order."""
        if not tables:
            raise ConfigError("Nothing to concatenate")
        width = max(table.node_count for table in tables)
        columns = {
            name: np.concatenate([getattr(table, name) for table in tables])
            for name in COLUMNS
        }
        order = np.lexsort((columns["t"], columns["rep_id"], columns["instance_id"]))
        return cls(width, **{name: col[order] for name, col in columns.items()})

    def __len__(self) -> int:
        return int(self.t.shape[0])

    def rows(self) -> Iterator[tuple[int, int, int, int, float, float, float]]:
        for i in range(len(self)):
            yield (
                int(self.instance_id[i]),
                int(self.rep_id[i]),
                int(self.t[i]),
                int(self.action[i]),
                float(self.reward[i]),
                float(self.inst_regret[i]),
                float(self.cum_regret[i]),
            )

    @property
    def horizon(self) -> int:
        return int(self.t.max()) if len(self) else 0

    def run_keys(self) -> list[tuple[int, int]]:
        """Sorted distinct ``(instance_id, rep_id)`` pairs."""
        pairs = np.unique(np.stack([self.instance_id, self.rep_id], axis=1), axis=0)
        return [(int(i), int(r)) for i, r in pairs]

    def final_cum_regret(self) -> FloatArray:
        """Cumulative regret at the last round of every run, in ``run_keys`` order."""
        last = self.t == self.horizon
        return self.cum_regret[last]

    def final_by_instance(self) -> dict[int, FloatArray]:
        last = self.t == self.horizon
        ids = self.instance_id[last]
        finals = self.cum_regret[last]
        return {int(i): finals[ids == i] for i in np.unique(ids)}

    def mean_curve(self) -> FloatArray:
        """Mean cumulative regret per round across all runs; index ``t - 1``."""
        runs = len(self.run_keys())
        return self.cum_regret.reshape(runs, self.horizon).mean(axis=0)


@dataclass(frozen=True)
class InstanceSpec:
    """A sampled true instance with its exact arm means, ready to replicate."""

    instance_id: int
    params: SemParameters
    arms: tuple[InterventionAction, ...]
    means: FloatArray
    optimal: InterventionAction
    optimal_mean: float


@dataclass(frozen=True)
class ReplicationTask:
    instance: InstanceSpec
    rep_id: int
    policy: PolicySettings
    horizon: int
    base_seed: int


def prepare_instances(config: ExperimentConfig) -> list[InstanceSpec]:
    """Sample every true instance and solve its oracle once.

    Instance ids run over ``structures x instances``. One prior center is
    drawn per structure and shared by its instances.
    """
    seed = config.run.seed
    specs: list[InstanceSpec] = []
    for structure in range(config.graph.structures):
        graph: GeneratedGraph = build_graph(config.graph, config.prior, structure)
        arms = tuple(graph.arms)
        prior = instance_prior(graph, config.prior)
        center = graph.center or sample_prior_center(
            graph.dag,
            config.prior,
            stream_rng(seed, instance=structure, purpose=StreamPurpose.PRIOR_CENTER),
        )
        for k in range(config.run.instances):
            instance_id = structure * config.run.instances + k
            rng = stream_rng(seed, instance=instance_id, purpose=StreamPurpose.INSTANCE)
            params = sample_sem_instance(graph.dag, prior, rng, center=center)
            means = arm_means(params, arms)
            best = int(np.argmax(means))
            specs.append(
                InstanceSpec(
                    instance_id=instance_id,
                    params=params,
                    arms=arms,
                    means=means,
                    optimal=arms[best],
                    optimal_mean=float(means[best]),
                )
            )
    return specs


def run_replication(task: ReplicationTask) -> RegretTable:
    """Play one policy for ``horizon`` rounds against one true instance."""
    spec = task.instance
    params = spec.params
    env_rng = stream_rng(
        task.base_seed, spec.instance_id, task.rep_id, StreamPurpose.ENVIRONMENT
    )
    policy_rng = stream_rng(
        task.base_seed, spec.instance_id, task.rep_id, StreamPurpose.POLICY
    )
    policy = build_policy(task.policy, params, spec.arms, policy_rng, task.horizon)
    matrices = stack_intervention_matrices(
        params.obs_weights, params.int_weights, list(spec.arms)
    )
    index = {arm: k for k, arm in enumerate(spec.arms)}

    horizon = task.horizon
    actions = np.zeros(horizon, dtype=np.int64)
    rewards = np.zeros(horizon)
    regrets = np.zeros(horizon)
    for t in range(1, horizon + 1):
        action = policy.choose(t)
        k = index[action]
        x = forward_pass(params, matrices[k], sample_noise(params.noise, env_rng))
        policy.observe(action, x)
        actions[t - 1] = action.mask
        rewards[t - 1] = x[-1]
        regrets[t - 1] = spec.optimal_mean - spec.means[k]

    n = params.dag.node_count
    return RegretTable(
        node_count=n,
        instance_id=np.full(horizon, spec.instance_id, dtype=np.int64),
        rep_id=np.full(horizon, task.rep_id, dtype=np.int64),
        t=np.arange(1, horizon + 1, dtype=np.int64),
        action=actions,
        reward=rewards,
        inst_regret=regrets,
        cum_regret=np.cumsum(regrets),
    )


async def _notify(
    observers: Sequence[ObserverProtocol], meta: RunMeta, event: RunEvent
) -> None:
    for observer in observers:
        await observer.on_event(meta, event)


async def run_experiment_async(
    config: ExperimentConfig,
    observers: Sequence[ObserverProtocol] = (),
    executor: Executor | None = None,
) -> RegretTable:
    """Run every ``(instance, rep)`` replication and merge their logs.

    With ``run.workers > 1`` (or an explicit ``executor``) replications run in
    worker processes; the merged table is identical either way.
    """
    for observer in observers:
        validate_observer(observer)
    started = time.time()
    meta = RunMeta(
        label=config.label, config_hash=compute_config_hash(config), started_at=started
    )
    for observer in observers:
        await observer.on_experiment_start(meta)

    own_pool: ProcessPoolExecutor | None = None
    if executor is None and config.run.workers > 1:
        own_pool = ProcessPoolExecutor(max_workers=config.run.workers)
        executor = own_pool

    try:
        await _notify(
            observers,
            meta,
            RunEvent(
                RunEventType.EXPERIMENT_START,
                config.label,
                {"policy": config.policy.label, "horizon": config.run.horizon},
            ),
        )
        instances = prepare_instances(config)
        for spec in instances:
            logger.info(
                "Instance %d: %d arms, optimal %s (mean %.6g)",
                spec.instance_id,
                len(spec.arms),
                spec.optimal.bitstring(spec.params.dag.node_count),
                spec.optimal_mean,
            )
            await _notify(
                observers,
                meta,
                RunEvent(
                    RunEventType.INSTANCE_READY,
                    f"instance {spec.instance_id}",
                    {"arms": len(spec.arms), "optimal_mean": spec.optimal_mean},
                ),
            )

        tasks = [
            ReplicationTask(
                instance=spec,
                rep_id=rep,
                policy=config.policy,
                horizon=config.run.horizon,
                base_seed=config.run.seed,
            )
            for spec in instances
            for rep in range(config.run.reps)
        ]
        loop = asyncio.get_running_loop()

        async def replicate(task: ReplicationTask) -> RegretTable:
            stage = f"instance {task.instance.instance_id} rep {task.rep_id}"
            await _notify(
                observers, meta, RunEvent(RunEventType.REPLICATION_START, stage)
            )
            if executor is None:
                table = run_replication(task)
            else:
                table = await loop.run_in_executor(executor, run_replication, task)
            await _notify(
                observers,
                meta,
                RunEvent(
                    RunEventType.REPLICATION_END,
                    stage,
                    {"final_cum_regret": float(table.cum_regret[-1])},
                ),
            )
            return table

        if executor is None:
            tables = [await replicate(task) for task in tasks]
        else:
            tables = list(await asyncio.gather(*(replicate(task) for task in tasks)))
        result = RegretTable.concat(tables)
    except Exception as error:
        for observer in observers:
            await observer.on_experiment_error(meta, error)
        raise
    finally:
        if own_pool is not None:
            own_pool.shutdown()

    duration = time.time() - started
    await _notify(
        observers,
        meta,
        RunEvent(
            RunEventType.EXPERIMENT_END,
            config.label,
            {
                "runs": len(tasks),
                "mean_final": float(result.final_cum_regret().mean()),
            },
        ),
    )
    for observer in observers:
        await observer.on_experiment_end(meta, duration)
    logger.info(
        "Experiment %s finished %d runs in %.2fs", meta.label, len(tasks), duration
    )
    return result


def run_experiment(
    config: ExperimentConfig, observers: Sequence[ObserverProtocol] = ()
) -> RegretTable:
    """Blocking wrapper around ``run_experiment_async``."""
    return asyncio.run(run_experiment_async(config, observers))
