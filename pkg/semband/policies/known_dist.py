"""Decision rule for the variant that knows every non-reward column."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from semband.environment.params import SemParameters
from semband.estimation.bank import EstimatorBank
from semband.estimation.confidence import ConfidenceSpec
from semband.estimation.node_estimator import Array
from semband.policies.base import pinned_matrices
from semband.policies.linsem_ts import linsem_ts_gaussian_choose
from semband.policies.linsem_ucb import (
    CoordinateAscentSettings,
    UcbWorkspace,
    linsem_ucb_choose,
)
from semband.sem.actions import InterventionAction
from semband.types import ConfigError, KnownDistMode


def known_dist_choose(
    bank: EstimatorBank,
    known: SemParameters,
    arms: Sequence[InterventionAction],
    nu: Array,
    mode: KnownDistMode,
    rng: np.random.Generator,
    sigma: float = 1.0,
    spec: ConfidenceSpec | None = None,
    settings: CoordinateAscentSettings | None = None,
) -> InterventionAction:
    """Apply the ``mode`` rule with every column except the reward's pinned to truth.

    ``bank`` normally learns only the reward node. UCB mode needs ``spec``.
    """
    base = pinned_matrices(bank.dag, known)
    if mode is KnownDistMode.TS:
        action, _ = linsem_ts_gaussian_choose(bank, arms, nu, sigma, rng, base=base)
        return action
    if spec is None:
        raise ConfigError("known_dist in ucb mode needs a confidence spec")
    ws = UcbWorkspace(
        bank=bank, settings=settings or CoordinateAscentSettings(), base=base
    )
    return linsem_ucb_choose(ws, arms, nu, spec, rng)
