"""CLI utility modules."""

from .display import (
    console,
    quantile_table,
    report_table,
    show_version_info,
    stats_table,
    summary_table,
)
from .errors import reported_errors
from .harness import CONFIG_FILE, DEFAULT_CONFIG, HOME_DIR, BenchHarness, get_harness
from .options import BUDGET_SETTING, batch_options, build_run_config

__all__ = [
    "console",
    "show_version_info",
    "stats_table",
    "report_table",
    "summary_table",
    "quantile_table",
    "reported_errors",
    "batch_options",
    "build_run_config",
    "BUDGET_SETTING",
    "BenchHarness",
    "get_harness",
    "HOME_DIR",
    "CONFIG_FILE",
    "DEFAULT_CONFIG",
]
