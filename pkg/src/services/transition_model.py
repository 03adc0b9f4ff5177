"""Bitmask form of an environment for search-based components.

Feature ``i`` maps to bit ``1 << i`` of an integer state code. Every
operation here agrees exactly with its State-level counterpart in
``dynamics``.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..models import Environment, Goal, NoiseSpec, State


@dataclass(frozen=True)
class CompiledAction:
    name: str
    index: int
    cond_mask: int
    cond_val: int
    set_mask: int
    clear_mask: int


class TransitionModel:
    """Compiled deterministic dynamics with an optional noise channel."""

    def __init__(self, env: Environment):
        """Compile an environment.

        Args:
            env: Environment to compile
        """
        self.env = env
        self.m = env.m
        self.actions: List[CompiledAction] = []
        for action in env.actions:
            cond_mask = cond_val = set_mask = clear_mask = 0
            for prop in action.condition:
                cond_mask |= 1 << prop.feature
                if prop.value:
                    cond_val |= 1 << prop.feature
            for write in action.effect:
                if write.value:
                    set_mask |= 1 << write.feature
                else:
                    clear_mask |= 1 << write.feature
            self.actions.append(
                CompiledAction(
                    action.name, action.index, cond_mask, cond_val, set_mask, clear_mask
                )
            )

    @property
    def n_actions(self) -> int:
        return len(self.actions)

    def encode(self, state: State) -> int:
        code = 0
        for i, bit in enumerate(state):
            if bit:
                code |= 1 << i
        return code

    def decode(self, code: int) -> State:
        return State(tuple((code >> i) & 1 for i in range(self.m)))

    def goal_masks(self, goal: Goal) -> Tuple[int, int]:
        mask = val = 0
        for prop in goal:
            mask |= 1 << prop.feature
            if prop.value:
                val |= 1 << prop.feature
        return mask, val

    def succeeds(self, code: int, a: int) -> bool:
        action = self.actions[a]
        return code & action.cond_mask == action.cond_val

    def apply(self, code: int, a: int) -> int:
        """Successor under noise-free semantics (no-op if the condition fails)."""
        action = self.actions[a]
        if code & action.cond_mask != action.cond_val:
            return code
        return (code | action.set_mask) & ~action.clear_mask

    def sample_noise(self, code: int, noise: NoiseSpec, rng: np.random.Generator) -> int:
        if not noise.enabled or self.m == 0:
            return code
        if rng.random() >= noise.p:
            return code
        return code ^ (1 << int(rng.integers(self.m)))

    def step(
        self, code: int, a: int, noise: NoiseSpec, rng: np.random.Generator
    ) -> Tuple[int, bool]:
        succeeded = self.succeeds(code, a)
        landed = self.apply(code, a) if succeeded else code
        return self.sample_noise(landed, noise, rng), succeeded

    def successors(self, code: int) -> List[Tuple[int, int]]:
        """(action index, next code) for every action that changes the state."""
        result = []
        for a in range(len(self.actions)):
            if self.succeeds(code, a):
                nxt = self.apply(code, a)
                if nxt != code:
                    result.append((a, nxt))
        return result
