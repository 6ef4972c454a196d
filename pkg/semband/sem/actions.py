from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from semband.types import ArmSpaceTooLarge, BadIndex

MAX_INTERVENABLE = 20
"""Hard cap on the intervenable set size; arms are enumerated, never subsampled."""


@dataclass(frozen=True, slots=True, order=True)
class InterventionAction:
    """One arm: the set of soft-intervened nodes, bit ``i`` for internal node ``i``."""

    mask: int = 0

    @classmethod
    def of(cls, nodes: Iterable[int]) -> InterventionAction:
        mask = 0
        for node in nodes:
            if node < 0:
                raise BadIndex(f"Negative node index {node}", node=node)
            mask |= 1 << node
        return cls(mask)

    def __contains__(self, node: object) -> bool:
        return isinstance(node, int) and node >= 0 and bool(self.mask >> node & 1)

    def __iter__(self) -> Iterator[int]:
        mask, node = self.mask, 0
        while mask:
            if mask & 1:
                yield node
            mask >>= 1
            node += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def bitstring(self, width: int) -> str:
        """Zero-padded binary rendering, most significant node first."""
        return format(self.mask, f"0{width}b")


def mask_of(nodes: Iterable[int]) -> int:
    return InterventionAction.of(nodes).mask


def enumerate_actions(intervenable: int) -> list[InterventionAction]:
    """All subsets of the intervenable bit set in ascending bitmask order.

    Raises:
        ArmSpaceTooLarge: more than ``MAX_INTERVENABLE`` intervenable nodes.
    """
    if intervenable < 0:
        raise BadIndex("Intervenable mask must be non-negative")
    positions = [
        bit for bit in range(intervenable.bit_length()) if intervenable >> bit & 1
    ]
    if len(positions) > MAX_INTERVENABLE:
        raise ArmSpaceTooLarge(
            f"{len(positions)} intervenable nodes give 2^{len(positions)} arms; "
            f"the cap is 2^{MAX_INTERVENABLE}"
        )
    actions: list[InterventionAction] = []
    # Depositing the bits of k onto sorted positions is order-preserving, so
    # ascending k yields ascending masks.
    for k in range(1 << len(positions)):
        mask = 0
        for slot, bit in enumerate(positions):
            if k >> slot & 1:
                mask |= 1 << bit
        actions.append(InterventionAction(mask))
    return actions
