"""Tabular Q-learning with epsilon-greedy exploration."""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from ...models import (
    Environment,
    EpisodeResult,
    Goal,
    MemoryBudgetExceededError,
    NoiseSpec,
    PrimitiveAction,
    State,
)
from ..transition_model import TransitionModel
from .episode import run_decision_loop

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QLearnConfig:
    """Q-learning hyperparameters.

    ``max_pairs`` bounds the number of stored state-action values; exceeding
    it is reported as running out of memory.
    """

    gamma: float = 0.99
    alpha: float = 0.1
    epsilon: float = 0.1
    training_episodes: int = 20000
    goal_reward: float = 0.0
    step_reward: float = -1.0
    q_init: float = 0.0
    max_pairs: int = 10**7
    episode_cap: Optional[int] = None

    def __post_init__(self) -> None:
        if not 0.0 < self.gamma < 1.0:
            raise ValueError(f"gamma must lie in (0, 1), got {self.gamma}")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if self.training_episodes < 0:
            raise ValueError("training_episodes must be non-negative")


@dataclass
class QTable:
    """Action values keyed by state code; absent states read as ``q_init``."""

    model: TransitionModel
    q_init: float = 0.0
    max_pairs: int = 10**7
    values: Dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def pairs(self) -> int:
        return len(self.values) * self.model.n_actions

    def row(self, code: int) -> np.ndarray:
        """Values at ``code`` without inserting it."""
        existing = self.values.get(code)
        if existing is not None:
            return existing
        return np.full(self.model.n_actions, self.q_init)

    def ensure(self, code: int) -> np.ndarray:
        """Values at ``code``, inserting a fresh row within the pair budget."""
        existing = self.values.get(code)
        if existing is not None:
            return existing
        if (len(self.values) + 1) * self.model.n_actions > self.max_pairs:
            raise MemoryBudgetExceededError(
                f"Q-table would exceed {self.max_pairs} state-action pairs"
            )
        fresh = np.full(self.model.n_actions, self.q_init)
        self.values[code] = fresh
        return fresh

    def greedy(self, code: int) -> int:
        return int(np.argmax(self.row(code)))


def qlearn_train(
    env: Environment,
    goal: Goal,
    config: QLearnConfig,
    noise: NoiseSpec,
    rng: np.random.Generator,
    s0: Optional[State] = None,
) -> QTable:
    """Learn a Q-table for reaching ``goal`` from ``s0`` (default: the environment start).

    Raises:
        MemoryBudgetExceededError: If the table outgrows ``config.max_pairs``
    """
    model = TransitionModel(env)
    table = QTable(model, config.q_init, config.max_pairs)
    if model.n_actions == 0:
        return table
    mask, val = model.goal_masks(goal)
    start = model.encode(s0 if s0 is not None else env.start)
    if start & mask == val:
        return table
    cap = config.episode_cap or env.episode_cap
    n = model.n_actions

    for episode in range(config.training_episodes):
        code = start
        for _ in range(cap):
            row = table.ensure(code)
            if rng.random() < config.epsilon:
                a = int(rng.integers(n))
            else:
                a = int(np.argmax(row))
            nxt, _ = model.step(code, a, noise, rng)
            done = nxt & mask == val
            if done:
                target = config.goal_reward
            else:
                target = config.step_reward + config.gamma * float(table.row(nxt).max())
            row[a] += config.alpha * (target - row[a])
            code = nxt
            if done:
                break
        if episode and episode % 5000 == 0:
            logger.debug(f"Q-learning {env.name}: episode {episode}, {table.pairs} pairs")
    return table


def qlearn_act(q: QTable, state: State) -> PrimitiveAction:
    """Greedy action at ``state``; ties go to the lowest action index."""
    return q.model.env.actions[q.greedy(q.model.encode(state))]


class QLearnPlanner:
    """Trains a fresh table for every episode, then acts greedily."""

    name = "qlearn"

    def __init__(self, config: Optional[QLearnConfig] = None):
        self.config = config or QLearnConfig()

    def run_episode(
        self,
        env: Environment,
        s0: State,
        goal: Goal,
        noise: NoiseSpec,
        rng: np.random.Generator,
    ) -> EpisodeResult:
        started = time.perf_counter()
        table = qlearn_train(env, goal, self.config, noise, rng, s0=s0)
        training_time = time.perf_counter() - started
        cap = self.config.episode_cap or env.episode_cap
        decide = table.greedy if table.model.n_actions else (lambda code: None)
        return run_decision_loop(
            table.model, s0, goal, noise, rng, decide, cap, self.name, training_time
        )
