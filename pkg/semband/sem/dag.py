"""Known causal structure: validation, topological relabeling and statistics."""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from semband.types import BadIndex, CycleDetected, RewardHasChild


@dataclass(frozen=True)
class DagStructure:
    """A validated DAG whose internal indices follow a topological order.

    Internal node ``i`` is original node ``topo_order[i]`` (0-based). Parents
    always carry smaller internal indices than their child, so any weight
    matrix supported on this DAG is strictly upper triangular. The reward node
    is the last internal index.
    """

    node_count: int
    parents: tuple[tuple[int, ...], ...]
    topo_order: tuple[int, ...]

    @property
    def reward_node(self) -> int:
        return self.node_count - 1

    @property
    def labels(self) -> tuple[int, ...]:
        """1-based original labels, indexed by internal node."""
        return tuple(original + 1 for original in self.topo_order)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.node_count)]
        for child, parents in enumerate(self.parents):
            for parent in parents:
                kids[parent].append(child)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def support(self) -> npt.NDArray[np.bool_]:
        """Boolean mask with ``support[j, i]`` set iff ``j`` is a parent of ``i``."""
        mask = np.zeros((self.node_count, self.node_count), dtype=bool)
        for child, parents in enumerate(self.parents):
            mask[list(parents), child] = True
        mask.setflags(write=False)
        return mask

    @cached_property
    def reward_ancestors(self) -> tuple[int, ...]:
        """Nodes with a directed path to the reward node, the reward included."""
        seen = {self.reward_node}
        stack = [self.reward_node]
        while stack:
            node = stack.pop()
            for parent in self.parents[node]:
                if parent not in seen:
                    seen.add(parent)
                    stack.append(parent)
        return tuple(sorted(seen))

    @property
    def edge_count(self) -> int:
        return sum(len(p) for p in self.parents)


@dataclass(frozen=True, slots=True)
class GraphStats:
    max_degree: int
    longest_path: int


def _find_cycle(parents: Sequence[Sequence[int]]) -> list[int]:
    """Return one directed cycle as a node path closed on its first node."""
    n = len(parents)
    children: list[list[int]] = [[] for _ in range(n)]
    for child, ps in enumerate(parents):
        for p in ps:
            children[p].append(child)

    state = [0] * n  # 0 unvisited, 1 on stack, 2 done
    path: list[int] = []

    def visit(node: int) -> list[int] | None:
        state[node] = 1
        path.append(node)
        for target in children[node]:
            if state[target] == 1:
                start = path.index(target)
                return path[start:] + [target]
            if state[target] == 0:
                found = visit(target)
                if found is not None:
                    return found
        path.pop()
        state[node] = 2
        return None

    for root in range(n):
        if state[root] == 0:
            found = visit(root)
            if found is not None:
                return found
    return []


def validate_dag(
    raw_parents: Sequence[Iterable[int]],
    reward_node: int,
) -> DagStructure:
    """Validate 0-based parent lists and relabel nodes into topological order.

    Ties in the topological order are broken by the smallest original index;
    the reward node is always placed last.

    Raises:
        BadIndex: out-of-range, duplicate or self-referencing parents.
        RewardHasChild: the reward node is some node's parent.
        CycleDetected: no topological order exists.
    """
    n = len(raw_parents)
    if n == 0:
        raise BadIndex("Graph must contain at least one node")
    if not 0 <= reward_node < n:
        raise BadIndex(
            f"Reward node {reward_node + 1} is out of range 1..{n}", node=reward_node
        )

    parents: list[tuple[int, ...]] = []
    for child, raw in enumerate(raw_parents):
        ps = tuple(int(p) for p in raw)
        for p in ps:
            if not 0 <= p < n:
                raise BadIndex(
                    f"Node {child + 1} lists parent {p + 1} outside 1..{n}", node=child
                )
            if p == child:
                raise BadIndex(f"Node {child + 1} lists itself as parent", node=child)
            if p == reward_node:
                raise RewardHasChild(
                    f"Reward node {reward_node + 1} is a parent of node {child + 1}",
                    node=child,
                )
        if len(set(ps)) != len(ps):
            raise BadIndex(f"Node {child + 1} lists a parent twice", node=child)
        parents.append(ps)

    indegree = [len(ps) for ps in parents]
    children: list[list[int]] = [[] for _ in range(n)]
    for child, ps in enumerate(parents):
        for p in ps:
            children[p].append(child)

    ready = [i for i in range(n) if indegree[i] == 0 and i != reward_node]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        node = heapq.heappop(ready)
        order.append(node)
        for child in children[node]:
            indegree[child] -= 1
            if indegree[child] == 0 and child != reward_node:
                heapq.heappush(ready, child)

    if len(order) != n - 1 or indegree[reward_node] != 0:
        cycle = _find_cycle(parents)
        cycle_path = " -> ".join(str(c + 1) for c in cycle)
        raise CycleDetected(
            f"Circular dependency detected: {cycle_path}. "
            "Remove one of these edges to break the cycle."
        )
    order.append(reward_node)

    position = {original: internal for internal, original in enumerate(order)}
    relabeled = tuple(
        tuple(sorted(position[p] for p in parents[original])) for original in order
    )
    return DagStructure(node_count=n, parents=relabeled, topo_order=tuple(order))


def graph_stats(dag: DagStructure) -> GraphStats:
    """Maximum in-degree and exact longest directed path (in edges)."""
    depth = [0] * dag.node_count
    for node in range(dag.node_count):
        ps = dag.parents[node]
        if ps:
            depth[node] = max(depth[p] for p in ps) + 1
    return GraphStats(
        max_degree=max((len(ps) for ps in dag.parents), default=0),
        longest_path=max(depth, default=0),
    )
