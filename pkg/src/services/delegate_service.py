"""Delegate: on-demand hierarchical planning through skill delegation.

A skill exists for every primitive action and aims at that action's effect.
The episode starts from an intent plan of skills, one per unmet goal
proposition. Whenever a skill reaches the head of the plan it is replaced by
a sub-plan: its action alone if the action's condition holds, otherwise one
skill per unmet condition followed by the skill itself. Delegation happens
lazily against the current state, so noise that undoes or completes part of
the work is picked up by the next decision.
"""

import logging
import time
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import (
    Callable,
    Deque,
    Dict,
    FrozenSet,
    List,
    Mapping,
    Optional,
    Tuple,
)

import numpy as np

from ..models import (
    ActionRef,
    DelegationDeadEndError,
    Effect,
    Environment,
    EpisodeResult,
    Goal,
    HorizonExceededError,
    NoiseSpec,
    Plan,
    PlanningError,
    PrimitiveAction,
    Proposition,
    SkillRef,
    State,
    UnreachableGoalError,
    effect_achieved,
)
from ..models.plan import PlanElement
from .dynamics import step

logger = logging.getLogger(__name__)

Disturbance = Callable[[int, State], State]


class CandidateRule(str, Enum):
    """How to pick among several skills able to satisfy one proposition."""

    FEWEST_UNMET = "fewest-unmet"
    DECLARATION_ORDER = "declaration-order"


@dataclass(frozen=True)
class Skill:
    """A known intended effect paired with the action that produces it."""

    id: str
    effect: Effect
    action: PrimitiveAction

    def __post_init__(self) -> None:
        if self.effect != self.action.effect:
            raise ValueError(f"Skill {self.id} effect differs from its action")


@dataclass(frozen=True)
class SkillRegistry:
    """Skills in declaration order, bucketed by the propositions they satisfy.

    Buckets keep declaration order; the candidate rule is applied at
    delegation time because fewest-unmet depends on the current state.
    """

    skills: Tuple[Skill, ...]
    by_proposition: Mapping[Proposition, Tuple[str, ...]]
    _by_id: Dict[str, Skill] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        self._by_id.update({s.id: s for s in self.skills})

    def skill(self, skill_id: str) -> Skill:
        try:
            return self._by_id[skill_id]
        except KeyError:
            raise PlanningError(f"Unknown skill: {skill_id}") from None

    def providers(self, prop: Proposition) -> Tuple[str, ...]:
        return self.by_proposition.get(prop, ())

    def __len__(self) -> int:
        return len(self.skills)


@dataclass(frozen=True)
class PlannerConfig:
    """Delegate settings.

    Attributes:
        horizon: Maximum length of any single generated plan, None for unbounded
        episode_cap: Step limit N, None to use the environment's cap
        candidate_rule: Tie-breaking among skills satisfying one proposition
    """

    horizon: Optional[int] = None
    episode_cap: Optional[int] = None
    candidate_rule: CandidateRule = CandidateRule.FEWEST_UNMET

    def __post_init__(self) -> None:
        object.__setattr__(self, "candidate_rule", CandidateRule(self.candidate_rule))
        if self.horizon is not None and self.horizon < 1:
            raise ValueError(f"Horizon must be positive, got {self.horizon}")
        if self.episode_cap is not None and self.episode_cap < 1:
            raise ValueError(f"Episode cap must be positive, got {self.episode_cap}")


DEFAULT_CONFIG = PlannerConfig()


def build_registry(env: Environment) -> SkillRegistry:
    """Create one skill per primitive action of ``env``."""
    skills = tuple(Skill(a.name, a.effect, a) for a in env.actions)
    buckets: Dict[Proposition, List[str]] = {}
    for skill in skills:
        for write in skill.effect:
            buckets.setdefault(write, []).append(skill.id)
    return SkillRegistry(skills, {p: tuple(ids) for p, ids in buckets.items()})


def choose_candidate(
    prop: Proposition,
    state: State,
    excluded: FrozenSet[str],
    reg: SkillRegistry,
    rule: CandidateRule = CandidateRule.FEWEST_UNMET,
) -> Optional[Skill]:
    """Pick the skill used to satisfy ``prop``, or None if every provider is excluded."""
    candidates = [reg.skill(i) for i in reg.providers(prop) if i not in excluded]
    if not candidates:
        return None
    if rule is CandidateRule.DECLARATION_ORDER:
        return candidates[0]
    return min(
        candidates,
        key=lambda s: (len(s.action.condition.unmet(state)), s.action.index),
    )


def _check_horizon(plan: Plan, config: PlannerConfig, owner: str) -> Plan:
    if config.horizon is not None and len(plan) > config.horizon:
        raise HorizonExceededError(
            f"Plan for {owner} has {len(plan)} elements, horizon is {config.horizon}"
        )
    return plan


def make_intent_plan(
    s0: State,
    goal: Goal,
    reg: SkillRegistry,
    config: PlannerConfig = DEFAULT_CONFIG,
) -> Plan:
    """One skill per goal proposition unmet at ``s0``, ascending by feature.

    Raises:
        UnreachableGoalError: If a goal proposition has no satisfying skill
        HorizonExceededError: If the intent is longer than the horizon
    """
    elements = []
    for prop in goal.unmet(s0):
        skill = choose_candidate(prop, s0, frozenset(), reg, config.candidate_rule)
        if skill is None:
            raise UnreachableGoalError(
                f"No skill satisfies goal proposition {prop.feature}={prop.value}"
            )
        elements.append(SkillRef(skill.id, purpose=prop))
    return _check_horizon(Plan(tuple(elements)), config, "intent")


def delegate_policy(
    skill: Skill,
    state: State,
    ancestors: FrozenSet[str],
    reg: SkillRegistry,
    config: PlannerConfig = DEFAULT_CONFIG,
    purpose: Optional[Proposition] = None,
) -> Plan:
    """Expand a skill against the current state.

    Returns the terminal plan ``(action)`` when the skill's condition holds,
    otherwise one condition skill per unmet proposition followed by the
    skill itself. ``purpose`` is carried onto the self-appended tail.

    Raises:
        DelegationDeadEndError: If an unmet proposition has no non-ancestor skill
        HorizonExceededError: If the plan is longer than the horizon
    """
    missing = skill.action.condition.unmet(state)
    if not missing:
        return Plan((ActionRef(skill.action),))

    excluded = ancestors | {skill.id}
    elements: List[PlanElement] = []
    for prop in missing:
        child = choose_candidate(prop, state, excluded, reg, config.candidate_rule)
        if child is None:
            raise DelegationDeadEndError(
                f"Skill {skill.id} needs feature {prop.feature}={prop.value} "
                f"and no non-ancestor skill provides it"
            )
        elements.append(SkillRef(child.id, purpose=prop))
    elements.append(SkillRef(skill.id, purpose=purpose))
    return _check_horizon(Plan(tuple(elements)), config, skill.id)


@dataclass
class _Frame:
    """One level of delegation: the generating skill and what is left of its plan."""

    generator: Optional[str]
    remaining: Deque[PlanElement]
    trace: List[PlanElement] = field(default_factory=list)


class DelegationCursor:
    """Executes a nested plan one primitive action at a time.

    The frame stack is the ancestors-per-depth context: the ancestors of an
    element are the generators of its frame and of every enclosing frame,
    except that a frame's self-appended tail is exempt from its own
    generator. Each frame also collects the trace of what it executed.
    """

    def __init__(self, plan: Plan):
        """Start a cursor at the head of ``plan``."""
        self._frames: List[_Frame] = [_Frame(None, deque(plan.elements))]
        self.delegations = 0

    @property
    def depth(self) -> int:
        return len(self._frames)

    def ancestors_for(self, skill_id: str) -> FrozenSet[str]:
        generators = {f.generator for f in self._frames if f.generator is not None}
        if skill_id == self._frames[-1].generator:
            generators.discard(skill_id)
        return frozenset(generators)

    def _pop(self) -> None:
        frame = self._frames.pop()
        if frame.trace:
            self._frames[-1].trace.append(Plan(tuple(frame.trace)))

    def next_action(
        self,
        state: State,
        reg: SkillRegistry,
        config: PlannerConfig = DEFAULT_CONFIG,
    ) -> Optional[PrimitiveAction]:
        """Advance to the next primitive action, or None when the plan is exhausted.

        Skill-refs whose purpose already holds are dropped without delegation.
        """
        limit = len(reg) + 1
        performed = 0
        while True:
            frame = self._frames[-1]
            if not frame.remaining:
                if len(self._frames) == 1:
                    return None
                self._pop()
                continue

            head = frame.remaining.popleft()
            if isinstance(head, ActionRef):
                frame.trace.append(head)
                return head.action
            if isinstance(head, Plan):
                self._frames.append(_Frame(None, deque(head.elements)))
                continue

            if head.purpose is not None and head.purpose.satisfied(state):
                logger.debug(f"Skipping {head.skill_id}: purpose already holds")
                continue

            performed += 1
            if performed > limit:
                raise PlanningError(
                    f"More than {limit} delegations in one decision"
                )
            skill = reg.skill(head.skill_id)
            sub = delegate_policy(
                skill,
                state,
                self.ancestors_for(skill.id),
                reg,
                config,
                purpose=head.purpose,
            )
            self.delegations += 1
            logger.debug(f"Delegated {skill.id} at {state}: {sub.render()}")
            self._frames.append(_Frame(skill.id, deque(sub.elements)))

    def load(self, plan: Plan) -> None:
        """Queue a fresh plan at the top level once the current one is exhausted."""
        while len(self._frames) > 1:
            self._pop()
        self._frames[0].remaining.extend(plan.elements)

    def remaining_plan(self) -> Plan:
        """The rest of the plan, innermost frame first, empty frames dropped."""
        inner: Optional[Plan] = None
        for frame in reversed(self._frames):
            elements: List[PlanElement] = []
            if inner is not None and len(inner):
                elements.append(inner)
            elements.extend(frame.remaining)
            inner = Plan(tuple(elements))
        assert inner is not None
        return inner

    def trace(self) -> Plan:
        """Nested execution trace so far, including frames still open.

        A lone top-level sub-plan is returned unwrapped.
        """
        inner: Optional[Plan] = None
        for frame in reversed(self._frames):
            elements = list(frame.trace)
            if inner is not None and len(inner):
                elements.append(inner)
            inner = Plan(tuple(elements))
        assert inner is not None
        if len(inner) == 1 and isinstance(inner.elements[0], Plan):
            return inner.elements[0]
        return inner


def get_action(
    plan: Plan,
    state: State,
    reg: SkillRegistry,
    cursor: Optional[DelegationCursor] = None,
    config: PlannerConfig = DEFAULT_CONFIG,
) -> Tuple[Optional[PrimitiveAction], Plan]:
    """Separate the next primitive action from the rest of the plan.

    Args:
        plan: Plan to start from; ignored when ``cursor`` is given
        state: Current state
        reg: Skill registry
        cursor: Delegation context carried across calls
        config: Planner configuration

    Returns:
        Tuple of (action or None if the plan is exhausted, remaining plan)
    """
    if cursor is None:
        cursor = DelegationCursor(plan)
    action = cursor.next_action(state, reg, config)
    return action, cursor.remaining_plan()


def run_episode(
    env: Environment,
    s0: State,
    goal: Goal,
    config: PlannerConfig,
    noise: NoiseSpec,
    rng: np.random.Generator,
    disturbance: Optional[Disturbance] = None,
    registry: Optional[SkillRegistry] = None,
) -> EpisodeResult:
    """Run one Delegate episode.

    ``disturbance(t, state)`` is applied after noise at step ``t`` and lets
    callers inject deterministic perturbations.
    """
    reg = registry or build_registry(env)
    cap = config.episode_cap or env.episode_cap
    if goal.achieved(s0):
        return EpisodeResult(True, 0, Plan(), (s0,), 0.0)

    state = s0
    states = [s0]
    actions: List[str] = []
    step_times: List[float] = []
    failed = 0

    started = time.perf_counter()
    try:
        intent = make_intent_plan(s0, goal, reg, config)
    except PlanningError as e:
        logger.warning(f"Episode on {env.name} failed before acting: {e}")
        return EpisodeResult(
            False,
            0,
            Plan(),
            (s0,),
            time.perf_counter() - started,
            failure_reason=e.reason,
        )
    intent_time = time.perf_counter() - started

    cursor = DelegationCursor(intent)
    reason: Optional[str] = "episode-cap"
    success = False
    for t in range(1, cap + 1):
        tick = time.perf_counter()
        try:
            action = cursor.next_action(state, reg, config)
            if action is None:
                logger.debug(f"Plan exhausted at {state}, regenerating intent")
                cursor.load(make_intent_plan(state, goal, reg, config))
                action = cursor.next_action(state, reg, config)
        except PlanningError as e:
            step_times.append(time.perf_counter() - tick)
            reason = e.reason
            logger.warning(f"Episode on {env.name} failed at step {t}: {e}")
            break
        step_times.append(time.perf_counter() - tick)
        if action is None:
            reason = PlanningError.reason
            break

        before = state
        state, succeeded = step(state, action, noise, rng)
        if not succeeded:
            failed += 1
        actions.append(action.name)
        if disturbance is not None:
            state = disturbance(t, state)
        states.append(state)
        if succeeded and not effect_achieved(before, state, action.effect):
            logger.debug(f"Effect of {action.name} was undone at t={t}")
        logger.debug(f"t={t} {action.name} -> {state}")

        if goal.achieved(state):
            success = True
            reason = None
            break

    result = EpisodeResult(
        success=success,
        executed_actions=len(actions),
        trace=cursor.trace(),
        states=tuple(states),
        planning_time=intent_time + sum(step_times),
        per_step_times=tuple(step_times),
        actions=tuple(actions),
        failed_actions=failed,
        failure_reason=reason,
    )
    logger.info(
        f"Delegate on {env.name}: success={success} actions={len(actions)} "
        f"reward={result.reward:.3f} delegations={cursor.delegations}"
    )
    return result


class DelegatePlanner:
    """Planner-protocol wrapper around :func:`run_episode`."""

    name = "delegate"

    def __init__(self, config: Optional[PlannerConfig] = None):
        self.config = config or DEFAULT_CONFIG

    def run_episode(
        self,
        env: Environment,
        s0: State,
        goal: Goal,
        noise: NoiseSpec,
        rng: np.random.Generator,
    ) -> EpisodeResult:
        return run_episode(env, s0, goal, self.config, noise, rng)
