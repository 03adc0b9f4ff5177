"""Tests for nested plans and plan metrics."""

from fractions import Fraction

import pytest

from src.models import (
    ActionRef,
    Plan,
    SkillRef,
    State,
    UnexpandedSkillError,
    effect_achieved,
    full_length,
    plan_reward,
)


@pytest.fixture
def worked_trace(steel):
    """Trace of the five-action steel plate episode."""
    a = lambda name: ActionRef(steel.action_named(name))  # noqa: E731
    return Plan.of(
        Plan.of(Plan.of(a("getStone")), Plan.of(a("makeStoneFurnace"))),
        Plan.of(Plan.of(a("getIronOre")), Plan.of(a("makeIronPlate"))),
        Plan.of(a("makeSteelPlate")),
    )


class TestPlan:
    """Test suite for Plan."""

    def test_render(self, worked_trace):
        assert worked_trace.render() == (
            "(((getStone),(makeStoneFurnace)),((getIronOre),(makeIronPlate)),(makeSteelPlate))"
        )

    def test_flatten_order(self, worked_trace):
        assert [a.name for a in worked_trace.flatten()] == [
            "getStone",
            "makeStoneFurnace",
            "getIronOre",
            "makeIronPlate",
            "makeSteelPlate",
        ]

    def test_full_length(self, steel, worked_trace):
        a = ActionRef(steel.action_named("getStone"))
        assert full_length(worked_trace) == 5
        assert full_length(Plan()) == 0
        assert full_length(Plan.of(a, Plan.of(a, a))) == 3

    def test_skill_blocks_flatten(self, steel):
        plan = Plan.of(ActionRef(steel.action_named("getStone")), Plan.of(SkillRef("x")))
        assert not plan.is_terminal
        assert plan.render() == "(getStone,(<x>))"
        with pytest.raises(UnexpandedSkillError):
            plan.flatten()

    def test_skill_purpose_ignored_in_equality(self, steel):
        assert SkillRef("x", purpose=steel.proposition("hasStone")) == SkillRef("x")

    def test_from_actions(self, steel):
        plan = Plan.from_actions(list(steel.actions[:2]))
        assert plan.is_terminal
        assert plan.render() == "(getStone,makeStoneFurnace)"


class TestPlanReward:
    """Test suite for plan_reward and effect_achieved."""

    def test_reward_is_inverse_length(self, worked_trace):
        assert plan_reward(True, worked_trace) == Fraction(1, 5)

    def test_failure_earns_nothing(self, worked_trace):
        assert plan_reward(False, worked_trace) == 0

    def test_single_action_and_empty(self, steel):
        single = Plan.of(ActionRef(steel.action_named("getStone")))
        assert plan_reward(True, single) == 1
        assert plan_reward(True, Plan()) == 1

    def test_effect_achieved(self, steel):
        furnace = steel.action_named("makeStoneFurnace").effect
        before = State.from_string("10000")
        assert effect_achieved(before, State.from_string("01000"), furnace)
        assert effect_achieved(before, State.from_string("01001"), furnace)
        assert not effect_achieved(before, State.from_string("11000"), furnace)
