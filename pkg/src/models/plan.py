"""Nested plans of skills and primitive actions, plus plan metrics."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from .environment import PrimitiveAction
from .errors import UnexpandedSkillError
from .state import Effect, Proposition, State


@dataclass(frozen=True)
class ActionRef:
    """Plan element naming a primitive action."""

    action: PrimitiveAction

    def __str__(self) -> str:
        return self.action.name


@dataclass(frozen=True)
class SkillRef:
    """Plan element naming a skill still to be delegated.

    ``purpose`` is the proposition the skill was scheduled to make true. It
    is bookkeeping for the executor and does not take part in equality.
    """

    skill_id: str
    purpose: Optional[Proposition] = field(default=None, compare=False)

    def __str__(self) -> str:
        return f"<{self.skill_id}>"


PlanElement = Union[ActionRef, SkillRef, "Plan"]


@dataclass(frozen=True)
class Plan:
    """Ordered, possibly nested sequence of skills and primitive actions."""

    elements: Tuple[PlanElement, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))

    @classmethod
    def of(cls, *elements: PlanElement) -> "Plan":
        return cls(tuple(elements))

    @classmethod
    def from_actions(cls, actions: List[PrimitiveAction]) -> "Plan":
        """Flat terminal plan of the given actions."""
        return cls(tuple(ActionRef(a) for a in actions))

    @property
    def is_terminal(self) -> bool:
        """True when no element at any depth is a skill."""
        return not any(isinstance(e, SkillRef) for e in self._walk())

    @property
    def is_empty(self) -> bool:
        return not self.elements

    def _walk(self) -> Iterator[PlanElement]:
        """Depth-first iteration over every element at every depth."""
        stack: List[Iterator[PlanElement]] = [iter(self.elements)]
        while stack:
            try:
                element = next(stack[-1])
            except StopIteration:
                stack.pop()
                continue
            yield element
            if isinstance(element, Plan):
                stack.append(iter(element.elements))

    def flatten(self) -> List[PrimitiveAction]:
        """Primitive actions in execution order.

        Raises:
            UnexpandedSkillError: If a skill appears at any depth
        """
        actions = []
        for element in self._walk():
            if isinstance(element, SkillRef):
                raise UnexpandedSkillError(
                    f"Plan still contains skill {element.skill_id}"
                )
            if isinstance(element, ActionRef):
                actions.append(element.action)
        return actions

    def render(self) -> str:
        """Nested text form, e.g. ``((getStone),(makeStoneFurnace))``."""
        return "(" + ",".join(_render(e) for e in self.elements) + ")"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PlanElement]:
        return iter(self.elements)

    def __str__(self) -> str:
        return self.render()


def _render(element: PlanElement) -> str:
    if isinstance(element, Plan):
        return element.render()
    return str(element)


def full_length(trace: Plan) -> int:
    """Number of primitive-action leaves in a fully expanded trace."""
    return len(trace.flatten())


def plan_reward(achieved: bool, trace: Plan) -> Fraction:
    """Reward of a plan that did or did not achieve its intended effect.

    An empty successful trace earns the maximal reward 1.
    """
    if not achieved:
        return Fraction(0)
    length = full_length(trace)
    if length == 0:
        return Fraction(1)
    return Fraction(1, length)


def effect_achieved(before: State, after: State, effect: Effect) -> bool:
    """Whether ``after`` agrees with ``before ⊕ effect`` on every written feature."""
    expected = effect.apply(before)
    return all(after[w.feature] == expected[w.feature] for w in effect.writes)
