"""Known-structure linear SEM core: DAGs, arms and reward coefficients."""

from semband.sem.actions import (
    MAX_INTERVENABLE,
    InterventionAction,
    enumerate_actions,
    mask_of,
)
from semband.sem.dag import DagStructure, GraphStats, graph_stats, validate_dag
from semband.sem.weights import (
    WeightMatrix,
    assemble_intervention_matrix,
    check_support,
    expected_reward,
    path_enumeration_coefficients,
    reward_coefficients,
)

__all__ = [
    "MAX_INTERVENABLE",
    "DagStructure",
    "GraphStats",
    "InterventionAction",
    "WeightMatrix",
    "assemble_intervention_matrix",
    "check_support",
    "enumerate_actions",
    "expected_reward",
    "graph_stats",
    "mask_of",
    "path_enumeration_coefficients",
    "reward_coefficients",
    "validate_dag",
]
