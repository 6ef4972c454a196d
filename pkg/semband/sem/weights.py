"""Weight-matrix algebra over a known DAG.

A weight matrix stores edge ``j -> i`` at ``[j, i]``. With nodes in
topological order it is strictly upper triangular, hence nilpotent, and the
reward coefficients ``f(B) = sum_{l=0..L} [B^l]_N`` are an exact finite sum.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, TypeAlias

import numpy as np
import numpy.typing as npt

from semband.sem.actions import InterventionAction
from semband.sem.dag import DagStructure, GraphStats
from semband.types import SupportMismatch, TooLarge

if TYPE_CHECKING:
    from semband.environment.params import SemParameters

WeightMatrix: TypeAlias = npt.NDArray[np.float64]
Vector: TypeAlias = npt.NDArray[np.float64]

MAX_ENUMERATION_NODES = 12


def check_support(dag: DagStructure, matrix: WeightMatrix, name: str = "B") -> None:
    """Raise SupportMismatch if ``matrix`` has weight outside the DAG edges."""
    n = dag.node_count
    if matrix.shape != (n, n):
        raise SupportMismatch(f"{name} has shape {matrix.shape}, expected ({n}, {n})")
    outside = np.argwhere((matrix != 0) & ~dag.support)
    if outside.size:
        j, i = (int(v) for v in outside[0])
        raise SupportMismatch(
            f"{name}[{j + 1}, {i + 1}] = {matrix[j, i]!r} but {j + 1} is not a "
            f"parent of {i + 1}",
            node=i,
        )


def intervened_columns(
    node_count: int, action: InterventionAction
) -> npt.NDArray[np.bool_]:
    cols = np.zeros(node_count, dtype=bool)
    for node in action:
        if node < node_count:
            cols[node] = True
    return cols


def assemble_intervention_matrix(
    params: SemParameters, action: InterventionAction
) -> WeightMatrix:
    """Column ``i`` comes from B* when ``i`` is intervened, from B otherwise."""
    check_support(params.dag, params.int_weights, "B*")
    cols = intervened_columns(params.dag.node_count, action)
    return np.where(cols[np.newaxis, :], params.int_weights, params.obs_weights)


def reward_coefficients(
    matrix: WeightMatrix, stats: GraphStats | int
) -> Vector:
    """Reward coefficients via ``v_0 = e_N, v_l = B v_{l-1}, f = sum v_l``.

    Accepts a single ``(N, N)`` matrix or a stack ``(..., N, N)`` and returns
    coefficients with the matching leading shape.
    """
    longest = stats if isinstance(stats, int) else stats.longest_path
    n = matrix.shape[-1]
    v = np.zeros(matrix.shape[:-1], dtype=np.float64)
    v[..., n - 1] = 1.0
    f = v.copy()
    for _ in range(longest):
        v = np.matmul(matrix, v[..., np.newaxis])[..., 0]
        f += v
    return f


def path_enumeration_coefficients(matrix: WeightMatrix) -> Vector:
    """Reward coefficients by explicitly walking every directed path to the reward.

    Raises:
        TooLarge: more than ``MAX_ENUMERATION_NODES`` nodes.
    """
    n = matrix.shape[0]
    if n > MAX_ENUMERATION_NODES:
        raise TooLarge(
            f"Path enumeration is limited to {MAX_ENUMERATION_NODES} nodes, got {n}"
        )
    target = n - 1
    children = [[int(i) for i in np.flatnonzero(matrix[j])] for j in range(n)]
    coefficients = np.zeros(n, dtype=np.float64)

    for start in range(n):
        total = 0.0
        stack: list[tuple[int, float]] = [(start, 1.0)]
        while stack:
            node, product = stack.pop()
            if node == target:
                total += product
                continue
            for child in children[node]:
                stack.append((child, product * float(matrix[node, child])))
        coefficients[start] = total
    return coefficients


def expected_reward(params: SemParameters, action: InterventionAction) -> float:
    """Expected reward ``<f(B_a), nu>`` under intervention ``action``."""
    matrix = assemble_intervention_matrix(params, action)
    f = reward_coefficients(matrix, params.stats)
    return float(f @ params.noise.mean)


def stack_intervention_matrices(
    obs_weights: WeightMatrix,
    int_weights: WeightMatrix,
    actions: list[InterventionAction],
) -> npt.NDArray[np.float64]:
    """Assemble ``B_a`` for every action at once, shape ``(len(actions), N, N)``."""
    n = obs_weights.shape[0]
    cols = np.stack([intervened_columns(n, a) for a in actions])
    return np.where(cols[:, np.newaxis, :], int_weights, obs_weights)
