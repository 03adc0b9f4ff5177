"""Data models for mip-delegate."""

from .environment import Environment, PrimitiveAction, make_action
from .errors import (
    BenchmarkConfigError,
    DelegationDeadEndError,
    EnvParseError,
    HorizonExceededError,
    InapplicablePlannerError,
    InvalidEnvironmentError,
    MemoryBudgetExceededError,
    MIPError,
    PlanningError,
    StateSpaceTooLargeError,
    UnexpandedSkillError,
    UnknownEnvironmentError,
    UnreachableGoalError,
)
from .plan import (
    ActionRef,
    Plan,
    SkillRef,
    effect_achieved,
    full_length,
    plan_reward,
)
from .results import (
    CSV_HEADER,
    SWEEP_HEADER,
    BenchmarkSummary,
    EpisodeResult,
    QuantileRow,
    RunRecord,
    quantile_rows,
    summarize,
)
from .state import Condition, Effect, Goal, NoiseSpec, Proposition, State

__all__ = [
    # State
    "State",
    "Proposition",
    "Condition",
    "Effect",
    "Goal",
    "NoiseSpec",
    # Environment
    "PrimitiveAction",
    "Environment",
    "make_action",
    # Plans
    "ActionRef",
    "SkillRef",
    "Plan",
    "full_length",
    "plan_reward",
    "effect_achieved",
    # Results
    "EpisodeResult",
    "RunRecord",
    "BenchmarkSummary",
    "QuantileRow",
    "summarize",
    "quantile_rows",
    "CSV_HEADER",
    "SWEEP_HEADER",
    # Errors
    "MIPError",
    "InvalidEnvironmentError",
    "EnvParseError",
    "UnknownEnvironmentError",
    "UnexpandedSkillError",
    "PlanningError",
    "UnreachableGoalError",
    "DelegationDeadEndError",
    "HorizonExceededError",
    "StateSpaceTooLargeError",
    "InapplicablePlannerError",
    "MemoryBudgetExceededError",
    "BenchmarkConfigError",
]
