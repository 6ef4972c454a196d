"""Unit tests for intervention actions and arm enumeration."""

from __future__ import annotations

import pytest

from semband.sem.actions import (
    MAX_INTERVENABLE,
    InterventionAction,
    enumerate_actions,
    mask_of,
)
from semband.types import ArmSpaceTooLarge, BadIndex


class TestInterventionAction:
    def test_of_sets_bits(self) -> None:
        action = InterventionAction.of([0, 3])
        assert action.mask == 0b1001
        assert 3 in action
        assert 1 not in action
        assert list(action) == [0, 3]
        assert len(action) == 2

    def test_empty_action(self) -> None:
        action = InterventionAction()
        assert action.mask == 0
        assert list(action) == []
        assert action.bitstring(3) == "000"

    def test_bitstring_puts_highest_node_first(self) -> None:
        assert InterventionAction.of([1]).bitstring(3) == "010"
        assert InterventionAction.of([0, 2]).bitstring(4) == "0101"

    def test_negative_node_rejected(self) -> None:
        with pytest.raises(BadIndex):
            InterventionAction.of([-1])

    def test_actions_order_by_mask(self) -> None:
        assert sorted([InterventionAction(4), InterventionAction(1)]) == [
            InterventionAction(1),
            InterventionAction(4),
        ]

    def test_mask_of(self) -> None:
        assert mask_of([1, 2]) == 0b110


class TestEnumerateActions:
    def test_empty_intervenable_gives_one_arm(self) -> None:
        assert enumerate_actions(0) == [InterventionAction()]

    def test_ascending_bitmask_order(self) -> None:
        masks = [a.mask for a in enumerate_actions(0b1010)]
        assert masks == [0b0000, 0b0010, 0b1000, 0b1010]

    def test_only_intervenable_bits_appear(self) -> None:
        intervenable = 0b10110
        for action in enumerate_actions(intervenable):
            assert action.mask & ~intervenable == 0

    def test_arm_count_is_power_of_two(self) -> None:
        assert len(enumerate_actions((1 << 10) - 1)) == 2**10

    def test_cap_rejects_twenty_one_nodes(self) -> None:
        with pytest.raises(ArmSpaceTooLarge):
            enumerate_actions((1 << (MAX_INTERVENABLE + 1)) - 1)
