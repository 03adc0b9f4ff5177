"""Transition semantics over State values.

Failed actions leave the state unchanged; noise wraps both outcomes.
"""

from typing import Tuple

import numpy as np

from ..models import Condition, Effect, NoiseSpec, PrimitiveAction, Proposition, State


def apply_effect(state: State, effect: Effect) -> State:
    """Return ``state ⊕ effect``."""
    return effect.apply(state)


def unmet(state: State, condition: Condition) -> Tuple[Proposition, ...]:
    """Condition propositions not satisfied in ``state``, ascending by feature."""
    return condition.unmet(state)


def sample_noise(state: State, noise: NoiseSpec, rng: np.random.Generator) -> State:
    """With probability ``noise.p`` invert one uniformly chosen feature.

    Draws nothing from ``rng`` when noise is disabled, so noise-free runs
    consume the stream identically regardless of episode length.
    """
    if not noise.enabled or len(state) == 0:
        return state
    if rng.random() >= noise.p:
        return state
    return state.flip(int(rng.integers(len(state))))


def step(
    state: State,
    action: PrimitiveAction,
    noise: NoiseSpec,
    rng: np.random.Generator,
) -> Tuple[State, bool]:
    """Execute one primitive action.

    Returns:
        Tuple of (next state, whether the action's condition held)
    """
    succeeded = action.condition.holds(state)
    landed = action.effect.apply(state) if succeeded else state
    return sample_noise(landed, noise, rng), succeeded
