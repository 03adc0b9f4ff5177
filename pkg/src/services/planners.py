"""Planner protocol and construction of planners from settings."""

from typing import Any, Dict, Optional, Protocol

import numpy as np

from ..models import Environment, EpisodeResult, Goal, NoiseSpec, State
from .baselines import (
    MctsConfig,
    MctsPlanner,
    QLearnConfig,
    QLearnPlanner,
    RrtConfig,
    RrtPlanner,
)
from .delegate_service import DelegatePlanner, PlannerConfig

PLANNER_IDS = ("delegate", "mcts", "rrt", "qlearn")


class Planner(Protocol):
    name: str

    def run_episode(
        self,
        env: Environment,
        s0: State,
        goal: Goal,
        noise: NoiseSpec,
        rng: np.random.Generator,
    ) -> EpisodeResult:
        ...


def make_planner(
    planner_id: str,
    settings: Optional[Dict[str, Any]] = None,
    episode_cap: Optional[int] = None,
) -> Planner:
    """Build a planner from its id and a settings mapping.

    Args:
        planner_id: One of ``delegate``, ``mcts``, ``rrt``, ``qlearn``
        settings: Keyword arguments for the planner's config dataclass
        episode_cap: Overrides the environment's cap when given

    Raises:
        ValueError: On an unknown id or unknown settings
    """
    settings = dict(settings or {})
    try:
        if planner_id == "delegate":
            return DelegatePlanner(PlannerConfig(episode_cap=episode_cap, **settings))
        if planner_id == "mcts":
            return MctsPlanner(MctsConfig(**settings), episode_cap=episode_cap)
        if planner_id == "rrt":
            return RrtPlanner(RrtConfig(**settings), episode_cap=episode_cap)
        if planner_id == "qlearn":
            return QLearnPlanner(QLearnConfig(episode_cap=episode_cap, **settings))
    except TypeError as e:
        raise ValueError(f"Invalid settings for planner {planner_id}: {e}") from e
    raise ValueError(
        f"Unknown planner '{planner_id}'. Choose from: {', '.join(PLANNER_IDS)}"
    )
