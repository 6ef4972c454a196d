"""Bandit agents sharing the choose/observe contract."""

from semband.policies.base import Policy, PolicyProtocol
from semband.policies.baseline_ucb import BaselineUcbPolicy, baseline_ucb_choose
from semband.policies.factory import PolicySettings, build_policy
from semband.policies.known_dist import known_dist_choose
from semband.policies.linsem_ts import LinSemTsPolicy, linsem_ts_gaussian_choose
from semband.policies.linsem_ucb import (
    AscentResult,
    CoordinateAscentSettings,
    LinSemUcbPolicy,
    UcbWorkspace,
    arm_ucb,
    column_coefficients,
    coordinate_ascent,
    linsem_ucb_choose,
    node_means,
)

__all__ = [
    "AscentResult",
    "BaselineUcbPolicy",
    "CoordinateAscentSettings",
    "LinSemTsPolicy",
    "LinSemUcbPolicy",
    "Policy",
    "PolicyProtocol",
    "PolicySettings",
    "UcbWorkspace",
    "arm_ucb",
    "baseline_ucb_choose",
    "build_policy",
    "column_coefficients",
    "coordinate_ascent",
    "known_dist_choose",
    "linsem_ts_gaussian_choose",
    "linsem_ucb_choose",
    "node_means",
]
