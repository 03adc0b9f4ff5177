"""Environment model: feature table, primitive actions and episode settings."""

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import InvalidEnvironmentError
from .state import Condition, Effect, Goal, Proposition, State

NAME_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_-]*$")

DEFAULT_EPISODE_CAP = 100


@dataclass(frozen=True)
class PrimitiveAction:
    """Atomic action with a success condition and a known effect.

    Executing the action where its condition does not hold is a silent no-op.
    """

    name: str
    condition: Condition
    effect: Effect
    index: int

    def succeeds(self, state: State) -> bool:
        return self.condition.holds(state)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Environment:
    """A complete planning problem domain.

    Features and actions keep their declaration order; feature ``i`` is bit
    ``i`` of every state.
    """

    name: str
    features: Tuple[str, ...]
    actions: Tuple[PrimitiveAction, ...]
    episode_cap: int = DEFAULT_EPISODE_CAP
    default_start: Optional[State] = None
    default_goal: Optional[Goal] = None
    _feature_index: Dict[str, int] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )
    _action_index: Dict[str, PrimitiveAction] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "features", tuple(self.features))
        object.__setattr__(self, "actions", tuple(self.actions))
        if self.default_start is None:
            object.__setattr__(self, "default_start", State.zeros(len(self.features)))
        self._validate()
        self._feature_index.update({n: i for i, n in enumerate(self.features)})
        self._action_index.update({a.name: a for a in self.actions})

    def _validate(self) -> None:
        """Check names, indices and widths at construction time."""
        m = len(self.features)
        if self.episode_cap < 1:
            raise InvalidEnvironmentError(
                f"Episode cap must be positive, got {self.episode_cap}"
            )
        if len(set(self.features)) != m:
            raise InvalidEnvironmentError("Feature names must be unique")
        for name in self.features:
            if not NAME_PATTERN.match(name):
                raise InvalidEnvironmentError(f"Invalid feature name: {name!r}")

        names = set()
        for position, action in enumerate(self.actions):
            if action.name in names:
                raise InvalidEnvironmentError(
                    f"Duplicate action name: {action.name}"
                )
            names.add(action.name)
            if not NAME_PATTERN.match(action.name):
                raise InvalidEnvironmentError(f"Invalid action name: {action.name!r}")
            if action.index != position:
                raise InvalidEnvironmentError(
                    f"Action {action.name} has index {action.index}, "
                    f"expected declaration position {position}"
                )
            for prop in (*action.condition.props, *action.effect.writes):
                if prop.feature >= m:
                    raise InvalidEnvironmentError(
                        f"Action {action.name} references feature {prop.feature} "
                        f"but the environment declares only {m}"
                    )

        assert self.default_start is not None
        if len(self.default_start) != m:
            raise InvalidEnvironmentError(
                f"Start state has {len(self.default_start)} bits, expected {m}"
            )
        if self.default_goal is not None:
            for prop in self.default_goal.props:
                if prop.feature >= m:
                    raise InvalidEnvironmentError(
                        f"Goal references feature {prop.feature} out of range"
                    )

    @property
    def m(self) -> int:
        """Number of features."""
        return len(self.features)

    @property
    def start(self) -> State:
        assert self.default_start is not None
        return self.default_start

    @property
    def state_space_size(self) -> int:
        return 2**self.m

    @property
    def is_consuming(self) -> bool:
        """Whether any action clears a feature (materials consumed by crafting)."""
        return any(action.effect.is_consuming for action in self.actions)

    @property
    def is_monotone(self) -> bool:
        """No consuming effects and no negative conditions."""
        return not self.is_consuming and all(
            prop.value == 1 for a in self.actions for prop in a.condition.props
        )

    def feature_index(self, name: str) -> int:
        try:
            return self._feature_index[name]
        except KeyError:
            raise InvalidEnvironmentError(f"Unknown feature: {name}") from None

    def action_named(self, name: str) -> PrimitiveAction:
        try:
            return self._action_index[name]
        except KeyError:
            raise InvalidEnvironmentError(f"Unknown action: {name}") from None

    def proposition(self, name: str, value: int = 1) -> Proposition:
        return Proposition(self.feature_index(name), value)

    def state_from(self, assignments: Iterable[Tuple[str, int]]) -> State:
        """Build a state from (feature name, value) pairs; others are 0."""
        return State.zeros(self.m).with_bits(
            (self.feature_index(n), v) for n, v in assignments
        )

    def goal_from(self, assignments: Iterable[Tuple[str, int]]) -> Goal:
        return Goal(tuple(self.proposition(n, v) for n, v in assignments))

    def describe(self, prop: Proposition) -> str:
        """Render a proposition as ``feature=value``."""
        return f"{self.features[prop.feature]}={prop.value}"

    def providers(self, prop: Proposition) -> List[PrimitiveAction]:
        """Actions whose effect makes the proposition true, in declaration order."""
        return [a for a in self.actions if a.effect.satisfies(prop)]


def make_action(
    env_features: Tuple[str, ...],
    name: str,
    needs: Iterable[Tuple[str, int]],
    gives: Iterable[Tuple[str, int]],
    index: int,
) -> PrimitiveAction:
    """Build an action from feature names; used by builtins and the generator."""
    lookup = {n: i for i, n in enumerate(env_features)}
    try:
        condition = Condition(tuple(Proposition(lookup[n], v) for n, v in needs))
        effect = Effect(tuple(Proposition(lookup[n], v) for n, v in gives))
    except KeyError as e:
        raise InvalidEnvironmentError(
            f"Action {name} references undeclared feature {e.args[0]}"
        ) from None
    return PrimitiveAction(name=name, condition=condition, effect=effect, index=index)
