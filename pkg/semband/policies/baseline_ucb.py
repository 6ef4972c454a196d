"""Non-causal UCB over the intervention arms, rewarded by the reward node alone."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from semband.estimation.node_estimator import Array
from semband.policies.base import Policy
from semband.sem.actions import InterventionAction
from semband.types import ConfigError


def baseline_ucb_choose(means: Array, counts: Array, t: int, c: float) -> int:
    """Index of the next arm: the first unpulled one, else the largest UCB index."""
    unpulled = np.flatnonzero(counts == 0)
    if unpulled.size:
        return int(unpulled[0])
    bonus = c * np.sqrt(2.0 * math.log(max(t, 1)) / counts)
    return int(np.argmax(means + bonus))


class BaselineUcbPolicy(Policy):
    """Classical UCB treating every arm as an independent reward distribution."""

    name = "baseline_ucb"

    def __init__(self, arms: Sequence[InterventionAction], c: float = 10.0) -> None:
        super().__init__(arms)
        if c < 0:
            raise ConfigError("UCB scale c must be non-negative")
        self.c = c
        self._index = {arm: k for k, arm in enumerate(self.arms)}
        self.counts = np.zeros(len(self.arms), dtype=np.int64)
        self.means = np.zeros(len(self.arms))

    def _choose(self, t: int) -> InterventionAction:
        return self.arms[baseline_ucb_choose(self.means, self.counts, t, self.c)]

    def _observe(self, action: InterventionAction, x: Array) -> None:
        k = self._index[action]
        self.counts[k] += 1
        self.means[k] += (float(x[-1]) - self.means[k]) / self.counts[k]
