"""Services for mip-delegate."""

from .benchmark_service import (
    BenchmarkRun,
    BenchmarkService,
    RunConfig,
    SweepConfig,
    SweepRun,
    noise_sweep,
    run_benchmark,
)
from .checker_service import (
    WellFormedReport,
    bfs_oracle,
    check_sufficient,
    check_well_formed,
)
from .delegate_service import (
    CandidateRule,
    DelegatePlanner,
    DelegationCursor,
    PlannerConfig,
    Skill,
    SkillRegistry,
    build_registry,
    delegate_policy,
    get_action,
    make_intent_plan,
    run_episode,
)
from .dynamics import apply_effect, sample_noise, step, unmet
from .env_catalog import builtin_env, env_stats, resolve_env
from .env_format import parse_assignments, parse_env, serialize_env
from .generator_service import GeneratorSpec, gen_random_env
from .planners import PLANNER_IDS, Planner, make_planner
from .storage_service import StorageConfig, StorageService
from .transition_model import TransitionModel

__all__ = [
    # Semantics
    "apply_effect",
    "unmet",
    "step",
    "sample_noise",
    "TransitionModel",
    # Delegate
    "CandidateRule",
    "Skill",
    "SkillRegistry",
    "PlannerConfig",
    "DelegationCursor",
    "DelegatePlanner",
    "build_registry",
    "make_intent_plan",
    "delegate_policy",
    "get_action",
    "run_episode",
    # Environments
    "parse_env",
    "serialize_env",
    "parse_assignments",
    "builtin_env",
    "resolve_env",
    "env_stats",
    "GeneratorSpec",
    "gen_random_env",
    "WellFormedReport",
    "check_well_formed",
    "check_sufficient",
    "bfs_oracle",
    # Bench
    "Planner",
    "PLANNER_IDS",
    "make_planner",
    "RunConfig",
    "SweepConfig",
    "BenchmarkRun",
    "SweepRun",
    "BenchmarkService",
    "run_benchmark",
    "noise_sweep",
    "StorageConfig",
    "StorageService",
]
