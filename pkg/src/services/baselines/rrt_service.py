"""Rapidly-exploring random tree over binary states.

Only defined where every action sets exactly one feature to 1, nothing is
consumed, and each feature has a single setting action.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ...models import (
    Environment,
    EpisodeResult,
    Goal,
    InapplicablePlannerError,
    NoiseSpec,
    Plan,
    State,
)
from ..transition_model import TransitionModel
from .episode import run_decision_loop

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RrtConfig:
    max_nodes: int = 1000
    goal_bias: float = 0.05

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError(f"max_nodes must be at least 1, got {self.max_nodes}")
        if not 0.0 <= self.goal_bias <= 1.0:
            raise ValueError(f"goal_bias must lie in [0, 1], got {self.goal_bias}")


def check_applicable(env: Environment) -> None:
    """Raise InapplicablePlannerError unless effects map one-to-one onto features."""
    providers = set()
    for action in env.actions:
        writes = action.effect.writes
        if len(writes) != 1 or writes[0].value != 1:
            raise InapplicablePlannerError(
                f"RRT needs single-feature setting effects; {action.name} writes "
                f"{', '.join(env.describe(w) for w in writes)}"
            )
        if writes[0].feature in providers:
            raise InapplicablePlannerError(
                f"RRT needs one setting action per feature; "
                f"{env.features[writes[0].feature]} has several"
            )
        providers.add(writes[0].feature)


# Samples that cannot extend the tree are retried, up to this many per node
ATTEMPTS_PER_NODE = 20


def _hamming(a: int, b: int) -> int:
    return (a ^ b).bit_count()


@dataclass
class RrtTree:
    """Tree nodes as state codes, with parent index and incoming action."""

    nodes: List[int]
    parents: List[int] = field(default_factory=lambda: [-1])
    via: List[int] = field(default_factory=lambda: [-1])
    goal_node: Optional[int] = None

    def __len__(self) -> int:
        return len(self.nodes)

    def add(self, code: int, parent: int, action: int) -> int:
        self.nodes.append(code)
        self.parents.append(parent)
        self.via.append(action)
        return len(self.nodes) - 1

    def nearest(self, target: int) -> int:
        return min(range(len(self.nodes)), key=lambda i: (_hamming(self.nodes[i], target), i))

    def path(self) -> Optional[List[int]]:
        """Actions from the root to the goal node, None if none was reached."""
        if self.goal_node is None:
            return None
        path = []
        i = self.goal_node
        while self.parents[i] != -1:
            path.append(self.via[i])
            i = self.parents[i]
        return path[::-1]


def grow_tree(
    model: TransitionModel,
    code: int,
    goal: Goal,
    config: RrtConfig,
    rng: np.random.Generator,
) -> RrtTree:
    """Grow a tree from ``code`` until it reaches the goal or holds ``max_nodes`` nodes."""
    tree = RrtTree(nodes=[code])
    mask, val = model.goal_masks(goal)
    if code & mask == val:
        tree.goal_node = 0
        return tree
    goal_code = (code & ~mask) | val

    seen = {code}
    attempts = 0
    max_attempts = ATTEMPTS_PER_NODE * config.max_nodes
    while len(tree) < config.max_nodes:
        if attempts >= max_attempts:
            logger.debug(
                f"RRT stopped after {attempts} samples with {len(tree)}/{config.max_nodes} nodes"
            )
            break
        attempts += 1
        if rng.random() < config.goal_bias:
            target = goal_code
        else:
            bits = rng.integers(0, 2, size=model.m)
            target = sum(1 << int(i) for i in np.flatnonzero(bits))

        near = tree.nearest(target)
        best = None
        best_dist = _hamming(tree.nodes[near], target)
        for a, nxt in model.successors(tree.nodes[near]):
            dist = _hamming(nxt, target)
            if dist < best_dist:
                best, best_dist = (a, nxt), dist
        if best is None or best[1] in seen:
            continue

        a, nxt = best
        index = tree.add(nxt, near, a)
        seen.add(nxt)
        if nxt & mask == val:
            tree.goal_node = index
            break
    return tree


def rrt_search(
    model: TransitionModel,
    code: int,
    goal: Goal,
    config: RrtConfig,
    rng: np.random.Generator,
) -> Optional[List[int]]:
    """Action path from ``code`` to a goal node, or None."""
    return grow_tree(model, code, goal, config, rng).path()


def rrt_plan(
    env: Environment,
    s0: State,
    goal: Goal,
    config: RrtConfig,
    rng: np.random.Generator,
) -> Optional[Plan]:
    """Terminal plan from ``s0`` to the goal, or None if the tree never reached it.

    Raises:
        InapplicablePlannerError: If the environment's effects are not one-to-one
    """
    check_applicable(env)
    model = TransitionModel(env)
    path = rrt_search(model, model.encode(s0), goal, config, rng)
    if path is None:
        return None
    return Plan.from_actions([env.actions[a] for a in path])


class RrtPlanner:
    """Grows a fresh tree at every time-step and executes its first action."""

    name = "rrt"

    def __init__(self, config: Optional[RrtConfig] = None, episode_cap: Optional[int] = None):
        self.config = config or RrtConfig()
        self.episode_cap = episode_cap

    def run_episode(
        self,
        env: Environment,
        s0: State,
        goal: Goal,
        noise: NoiseSpec,
        rng: np.random.Generator,
    ) -> EpisodeResult:
        check_applicable(env)
        model = TransitionModel(env)

        def decide(code: int) -> Optional[int]:
            path = rrt_search(model, code, goal, self.config, rng)
            return path[0] if path else None

        cap = self.episode_cap or env.episode_cap
        return run_decision_loop(model, s0, goal, noise, rng, decide, cap, self.name)
