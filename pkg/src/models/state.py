"""Binary state vectors and the propositions that read and write them."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from .errors import InvalidEnvironmentError


@dataclass(frozen=True)
class State:
    """Fixed-width binary feature vector.

    The vector is the complete observable configuration of an environment;
    its width is the environment's feature count and never changes.
    """

    bits: Tuple[int, ...]

    def __post_init__(self) -> None:
        for bit in self.bits:
            if bit not in (0, 1):
                raise InvalidEnvironmentError(
                    f"State bits must be 0 or 1, got {bit!r}"
                )

    @classmethod
    def zeros(cls, width: int) -> "State":
        """Create the all-zero state of the given width."""
        return cls(tuple([0] * width))

    @classmethod
    def from_string(cls, text: str) -> "State":
        """Create a state from a bit string such as ``"01000"``."""
        try:
            return cls(tuple(int(ch) for ch in text.strip()))
        except ValueError as e:
            raise InvalidEnvironmentError(f"Invalid bit string: {text!r}") from e

    def with_bits(self, writes: Iterable[Tuple[int, int]]) -> "State":
        """Return a copy with the given (feature, value) pairs written."""
        bits = list(self.bits)
        for feature, value in writes:
            bits[feature] = value
        return State(tuple(bits))

    def flip(self, feature: int) -> "State":
        """Return a copy with one feature inverted."""
        bits = list(self.bits)
        bits[feature] = 1 - bits[feature]
        return State(tuple(bits))

    def hamming(self, other: "State") -> int:
        """Number of features on which two states differ."""
        return sum(1 for a, b in zip(self.bits, other.bits) if a != b)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, feature: int) -> int:
        return self.bits[feature]

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)


@dataclass(frozen=True, order=True)
class Proposition:
    """Unit feature test ``bits[feature] == value``."""

    feature: int
    value: int

    def __post_init__(self) -> None:
        if self.feature < 0:
            raise InvalidEnvironmentError(
                f"Feature index must be non-negative, got {self.feature}"
            )
        if self.value not in (0, 1):
            raise InvalidEnvironmentError(
                f"Proposition value must be 0 or 1, got {self.value!r}"
            )

    def satisfied(self, state: State) -> bool:
        """Check whether the proposition holds in a state."""
        return state.bits[self.feature] == self.value


def _canonical(props: Iterable[Proposition], kind: str) -> Tuple[Proposition, ...]:
    """Sort propositions by feature and reject duplicate feature indices."""
    ordered = tuple(sorted(props))
    seen = set()
    for prop in ordered:
        if prop.feature in seen:
            raise InvalidEnvironmentError(
                f"{kind} names feature {prop.feature} more than once"
            )
        seen.add(prop.feature)
    return ordered


@dataclass(frozen=True)
class Condition:
    """Conjunction of propositions gating an action's success.

    An empty condition always holds (entry actions such as ``getStone``).
    Propositions are kept sorted by feature index, which is also the
    iteration order used when listing unmet conditions.
    """

    props: Tuple[Proposition, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "props", _canonical(self.props, "Condition"))

    def holds(self, state: State) -> bool:
        return all(prop.satisfied(state) for prop in self.props)

    def unmet(self, state: State) -> Tuple[Proposition, ...]:
        """Propositions not satisfied in the state, in ascending feature order."""
        return tuple(prop for prop in self.props if not prop.satisfied(state))

    def features(self) -> List[int]:
        return [prop.feature for prop in self.props]

    def __len__(self) -> int:
        return len(self.props)

    def __iter__(self) -> Iterator[Proposition]:
        return iter(self.props)


@dataclass(frozen=True)
class Effect:
    """Partial assignment written by a successful action.

    Writes to 0 model consuming effects (materials used up by crafting).
    """

    writes: Tuple[Proposition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "writes", _canonical(self.writes, "Effect"))
        if not self.writes:
            raise InvalidEnvironmentError("Effect must write at least one feature")

    def apply(self, state: State) -> State:
        """Return ``state ⊕ effect``; the input state is not modified."""
        return state.with_bits((w.feature, w.value) for w in self.writes)

    def satisfies(self, prop: Proposition) -> bool:
        """Whether applying the effect makes the proposition true."""
        return prop in self.writes

    @property
    def is_consuming(self) -> bool:
        return any(w.value == 0 for w in self.writes)

    def features(self) -> List[int]:
        return [w.feature for w in self.writes]

    def __iter__(self) -> Iterator[Proposition]:
        return iter(self.writes)


@dataclass(frozen=True)
class Goal:
    """Partial assignment that must hold for an episode to succeed."""

    props: Tuple[Proposition, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "props", _canonical(self.props, "Goal"))

    def achieved(self, state: State) -> bool:
        return all(prop.satisfied(state) for prop in self.props)

    def unmet(self, state: State) -> Tuple[Proposition, ...]:
        return tuple(prop for prop in self.props if not prop.satisfied(state))

    def complete(self, state: State) -> State:
        """Return the state with every goal proposition written into it."""
        return state.with_bits((p.feature, p.value) for p in self.props)

    def __len__(self) -> int:
        return len(self.props)

    def __iter__(self) -> Iterator[Proposition]:
        return iter(self.props)


@dataclass(frozen=True)
class NoiseSpec:
    """Transition noise: with probability ``p`` one uniformly chosen feature flips."""

    p: float = 0.0
    mode: str = "single-flip"

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise InvalidEnvironmentError(
                f"Noise probability must lie in [0, 1], got {self.p}"
            )
        if self.mode != "single-flip":
            raise InvalidEnvironmentError(f"Unsupported noise mode: {self.mode}")

    @property
    def enabled(self) -> bool:
        return self.p > 0.0
