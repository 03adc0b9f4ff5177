"""Monte-Carlo tree search (UCT) over the noise-free simulation model."""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ...models import Environment, EpisodeResult, Goal, NoiseSpec, PrimitiveAction, State
from ..transition_model import TransitionModel
from .episode import run_decision_loop

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MctsConfig:
    """UCT settings.

    Attributes:
        budget: Simulations per decision
        exploration_c: UCT exploration constant
        rollout_depth: Maximum actions from the decision state, None for the episode cap
        discount: Reward ``discount ** (depth - 1)`` for reaching the goal at ``depth``
    """

    budget: int = 1000
    exploration_c: float = 1 / math.sqrt(2)
    rollout_depth: Optional[int] = None
    discount: float = 0.95

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ValueError(f"MCTS budget must be at least 1, got {self.budget}")
        if self.exploration_c <= 0:
            raise ValueError("Exploration constant must be positive")
        if self.rollout_depth is not None and self.rollout_depth < 1:
            raise ValueError("Rollout depth must be positive")


@dataclass
class _Node:
    code: int
    terminal: bool
    untried: List[int]
    children: Dict[int, "_Node"] = field(default_factory=dict)
    visits: int = 0
    value_sum: float = 0.0

    @property
    def mean(self) -> float:
        return self.value_sum / self.visits if self.visits else 0.0


class MctsSearch:
    """One UCT search from a fixed decision state."""

    def __init__(
        self,
        model: TransitionModel,
        goal: Goal,
        config: MctsConfig,
        rng: np.random.Generator,
        depth: int,
    ):
        self.model = model
        self.mask, self.val = model.goal_masks(goal)
        self.config = config
        self.rng = rng
        self.depth = depth
        self.root: Optional[_Node] = None

    def _node(self, code: int) -> _Node:
        return _Node(
            code=code,
            terminal=code & self.mask == self.val,
            untried=list(range(self.model.n_actions)),
        )

    def _reward(self, depth: int) -> float:
        return self.config.discount ** (depth - 1)

    def _select_child(self, node: _Node) -> Tuple[int, _Node]:
        log_n = math.log(node.visits)
        c = self.config.exploration_c
        best = None
        best_score = -math.inf
        for a in sorted(node.children):
            child = node.children[a]
            score = child.mean + c * math.sqrt(log_n / child.visits)
            if score > best_score:
                best, best_score = a, score
        assert best is not None
        return best, node.children[best]

    def _rollout(self, code: int, depth: int) -> float:
        remaining = self.depth - depth
        if remaining <= 0:
            return 0.0
        for a in self.rng.integers(0, self.model.n_actions, size=remaining):
            code = self.model.apply(code, int(a))
            depth += 1
            if code & self.mask == self.val:
                return self._reward(depth)
        return 0.0

    def run(self, code: int) -> int:
        """Run the full budget and return the most visited root action."""
        root = self.root = self._node(code)
        for _ in range(self.config.budget):
            node = root
            path = [root]
            depth = 0
            while not node.terminal and not node.untried and node.children:
                _, node = self._select_child(node)
                path.append(node)
                depth += 1

            if node.terminal:
                reward = self._reward(depth) if depth else 1.0
            else:
                if node.untried and depth < self.depth:
                    a = node.untried.pop(int(self.rng.integers(len(node.untried))))
                    child = self._node(self.model.apply(node.code, a))
                    node.children[a] = child
                    node = child
                    path.append(node)
                    depth += 1
                if node.terminal:
                    reward = self._reward(depth)
                else:
                    reward = self._rollout(node.code, depth)

            for visited in path:
                visited.visits += 1
                visited.value_sum += reward

        if not root.children:
            # goal already holds at the root
            return 0
        return max(sorted(root.children), key=lambda a: root.children[a].visits)

    def root_visits(self) -> np.ndarray:
        """Visit count of every root action (zero for unexpanded actions)."""
        counts = np.zeros(self.model.n_actions, dtype=int)
        if self.root is not None:
            for a, child in self.root.children.items():
                counts[a] = child.visits
        return counts


def mcts_decide(
    model: TransitionModel,
    state: State,
    goal: Goal,
    config: MctsConfig,
    rng: np.random.Generator,
) -> PrimitiveAction:
    """Choose one action from ``state`` by UCT search."""
    depth = config.rollout_depth or model.env.episode_cap
    search = MctsSearch(model, goal, config, rng, depth)
    return model.env.actions[search.run(model.encode(state))]


class MctsPlanner:
    """Re-plans from scratch at every time-step."""

    name = "mcts"

    def __init__(self, config: Optional[MctsConfig] = None, episode_cap: Optional[int] = None):
        self.config = config or MctsConfig()
        self.episode_cap = episode_cap

    def run_episode(
        self,
        env: Environment,
        s0: State,
        goal: Goal,
        noise: NoiseSpec,
        rng: np.random.Generator,
    ) -> EpisodeResult:
        model = TransitionModel(env)
        if model.n_actions == 0:
            return run_decision_loop(
                model, s0, goal, noise, rng, lambda code: None, 1, self.name
            )
        cap = self.episode_cap or env.episode_cap
        depth = self.config.rollout_depth or cap

        def decide(code: int) -> int:
            return MctsSearch(model, goal, self.config, rng, depth).run(code)

        return run_decision_loop(model, s0, goal, noise, rng, decide, cap, self.name)
