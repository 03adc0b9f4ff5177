"""CLI command modules."""

from .check import check
from .gen import gen
from .oracle import oracle
from .run import run
from .show import show
from .stats import stats
from .sweep import sweep

__all__ = [
    "check",
    "stats",
    "oracle",
    "gen",
    "show",
    "run",
    "sweep",
]
