"""Comparison planners: MCTS, RRT and tabular Q-learning."""

from .episode import run_decision_loop
from .mcts_service import MctsConfig, MctsPlanner, MctsSearch, mcts_decide
from .qlearn_service import QLearnConfig, QLearnPlanner, QTable, qlearn_act, qlearn_train
from .rrt_service import (
    RrtConfig,
    RrtPlanner,
    RrtTree,
    check_applicable,
    grow_tree,
    rrt_plan,
    rrt_search,
)

__all__ = [
    "run_decision_loop",
    "MctsConfig",
    "MctsPlanner",
    "MctsSearch",
    "mcts_decide",
    "RrtConfig",
    "RrtPlanner",
    "RrtTree",
    "grow_tree",
    "check_applicable",
    "rrt_plan",
    "rrt_search",
    "QLearnConfig",
    "QLearnPlanner",
    "QTable",
    "qlearn_act",
    "qlearn_train",
]
