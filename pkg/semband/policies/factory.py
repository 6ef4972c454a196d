"""Build a policy from its settings block."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from semband.environment.params import SemParameters
from semband.policies.base import Policy
from semband.policies.baseline_ucb import BaselineUcbPolicy
from semband.policies.linsem_ts import LinSemTsPolicy
from semband.policies.linsem_ucb import CoordinateAscentSettings, LinSemUcbPolicy
from semband.sem.actions import InterventionAction
from semband.types import ConfigError, KnownDistMode, PolicyKind


@dataclass(frozen=True, slots=True)
class PolicySettings:
    """Policy choice and hyperparameters.

    ``c`` defaults to ``m``. ``mode`` only matters for ``known_dist``.
    """

    kind: PolicyKind = PolicyKind.LINSEM_TS_GAUSSIAN
    sigma: float = 1.0
    c: float | None = None
    m: float = 10.0
    max_sweeps: int = 50
    restarts: int = 4
    improvement_tol: float = 1e-9
    adaptive_m: bool = False
    mode: KnownDistMode = KnownDistMode.TS
    beta: float | None = None

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise ConfigError("sigma must be non-negative")
        if self.m <= 0:
            raise ConfigError("m must be positive")
        if self.c is not None and self.c < 0:
            raise ConfigError("c must be non-negative")
        if self.beta is not None and self.beta < 0:
            raise ConfigError("beta must be non-negative")
        self.ascent()

    @property
    def ucb_scale(self) -> float:
        return self.m if self.c is None else self.c

    def ascent(self) -> CoordinateAscentSettings:
        return CoordinateAscentSettings(
            max_sweeps=self.max_sweeps,
            restarts=self.restarts,
            improvement_tol=self.improvement_tol,
        )

    @property
    def label(self) -> str:
        if self.kind is PolicyKind.KNOWN_DIST:
            return f"{self.kind.value}[{self.mode.value}]"
        return self.kind.value


def build_policy(
    settings: PolicySettings,
    params: SemParameters,
    arms: Sequence[InterventionAction],
    rng: np.random.Generator,
    horizon: int,
) -> Policy:
    """Instantiate the configured policy for one replication.

    ``params`` supplies the graph and ``nu``; the true weights are read only
    by the known-distribution variant.
    """
    dag = params.dag
    nu = params.noise.mean
    kind = settings.kind
    known = params if kind is PolicyKind.KNOWN_DIST else None
    if kind is PolicyKind.BASELINE_UCB:
        return BaselineUcbPolicy(arms, c=settings.ucb_scale)
    if kind is PolicyKind.LINSEM_TS_GAUSSIAN or (
        known is not None and settings.mode is KnownDistMode.TS
    ):
        policy: Policy = LinSemTsPolicy(
            dag, arms, nu, rng, sigma=settings.sigma, known=known
        )
    else:
        policy = LinSemUcbPolicy(
            dag,
            arms,
            nu,
            rng,
            horizon,
            m=settings.m,
            beta=settings.beta,
            settings=settings.ascent(),
            known=known,
            adaptive_m=settings.adaptive_m,
        )
    if known is not None:
        policy.name = settings.label
    return policy
