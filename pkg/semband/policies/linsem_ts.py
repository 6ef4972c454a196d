"""Thompson sampling with Gaussian posteriors over every weight column."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from semband.environment.params import SemParameters
from semband.estimation.bank import EstimatorBank
from semband.estimation.node_estimator import Array
from semband.estimation.posterior import sample_posterior
from semband.policies.base import Policy, best_arm, make_bank, pinned_matrices
from semband.sem.actions import InterventionAction
from semband.sem.dag import DagStructure, graph_stats
from semband.sem.weights import reward_coefficients, stack_intervention_matrices


def linsem_ts_gaussian_choose(
    bank: EstimatorBank,
    arms: Sequence[InterventionAction],
    nu: Array,
    sigma: float,
    rng: np.random.Generator,
    base: tuple[Array, Array] | None = None,
    longest_path: int | None = None,
) -> tuple[InterventionAction, Array]:
    """Draw one posterior sample per learned column and act greedily on it.

    Samples are drawn once and shared by every arm. Returns the chosen arm
    (ties to the lowest bitmask) and the sampled mean of each arm in ``arms``
    order.
    """
    dag = bank.dag
    obs, inter = (
        (np.zeros((dag.node_count,) * 2), np.zeros((dag.node_count,) * 2))
        if base is None
        else (base[0].copy(), base[1].copy())
    )
    for node in bank.nodes:
        ps = list(dag.parents[node])
        obs[ps, node] = sample_posterior(bank.obs[node], sigma, rng)
        inter[ps, node] = sample_posterior(bank.int[node], sigma, rng)

    depth = graph_stats(dag).longest_path if longest_path is None else longest_path
    matrices = stack_intervention_matrices(obs, inter, list(arms))
    means = reward_coefficients(matrices, depth) @ nu
    return best_arm(arms, means), means


class LinSemTsPolicy(Policy):
    """LinSEM-TS-Gaussian; with ``known`` set, only the reward column is learned."""

    name = "linsem_ts_gaussian"

    def __init__(
        self,
        dag: DagStructure,
        arms: Sequence[InterventionAction],
        nu: Array,
        rng: np.random.Generator,
        sigma: float = 1.0,
        known: SemParameters | None = None,
    ) -> None:
        super().__init__(arms)
        self.dag = dag
        self.nu = np.asarray(nu, dtype=np.float64)
        self.sigma = sigma
        self.rng = rng
        self.bank = make_bank(dag, known)
        self._base = pinned_matrices(dag, known)
        self._longest = graph_stats(dag).longest_path
        self.draws = 0
        self.last_sampled_means: Array | None = None

    def _choose(self, t: int) -> InterventionAction:
        action, means = linsem_ts_gaussian_choose(
            self.bank,
            self.arms,
            self.nu,
            self.sigma,
            self.rng,
            base=self._base,
            longest_path=self._longest,
        )
        self.draws += 2 * len(self.bank.nodes)
        self.last_sampled_means = means
        return action

    def _observe(self, action: InterventionAction, x: Array) -> None:
        self.bank.observe(action, x, self.nu)
