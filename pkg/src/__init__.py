"""mip-delegate - hierarchical on-demand planning with skill delegation."""

from ._version import __author__, __description__, __version__
from .container import ServiceContainer
from .models import (
    Condition,
    Effect,
    Environment,
    EpisodeResult,
    Goal,
    NoiseSpec,
    Plan,
    PrimitiveAction,
    Proposition,
    State,
)
from .services import (
    BenchmarkService,
    DelegatePlanner,
    PlannerConfig,
    StorageService,
    bfs_oracle,
    builtin_env,
    check_well_formed,
    parse_env,
    run_episode,
)

__all__ = [
    # Services
    "BenchmarkService",
    "StorageService",
    "DelegatePlanner",
    "PlannerConfig",
    "run_episode",
    "builtin_env",
    "parse_env",
    "check_well_formed",
    "bfs_oracle",
    # Models
    "State",
    "Proposition",
    "Condition",
    "Effect",
    "Goal",
    "NoiseSpec",
    "PrimitiveAction",
    "Environment",
    "Plan",
    "EpisodeResult",
    # Container
    "ServiceContainer",
    # Version
    "__version__",
    "__author__",
    "__description__",
]
