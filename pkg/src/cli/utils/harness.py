"""Benchmark harness: configuration, logging and service wiring."""

import copy
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from ...container import ServiceContainer
from ...services import BenchmarkService, StorageConfig, StorageService
from .errors import reported_errors

logger = logging.getLogger(__name__)

HOME_DIR = Path.home() / ".mip-delegate"
CONFIG_FILE = HOME_DIR / "settings.json"

DEFAULT_CONFIG: Dict[str, Any] = {
    "logging": {
        "level": "WARNING",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "file": None,
    },
    "delegate": {"candidate_rule": "fewest-unmet", "horizon": None},
    "mcts": {"budget": 1000, "exploration_c": 0.7071067811865476, "discount": 0.95},
    "rrt": {"max_nodes": 1000, "goal_bias": 0.05},
    "qlearn": {
        "gamma": 0.99,
        "alpha": 0.1,
        "epsilon": 0.1,
        "training_episodes": 20000,
        "max_pairs": 10**7,
    },
    "bench": {"workers": 1, "output_dir": "."},
}


def merge_config(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Overlay ``override`` on ``base`` section by section."""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key].update(value)
        else:
            merged[key] = value
    return merged


class BenchHarness:
    """Orchestrates configuration, logging and the service container."""

    def __init__(
        self,
        config: Optional[Dict[str, Any]] = None,
        debug: bool = False,
        config_file: Optional[Path] = None,
    ):
        """Initialize the harness.

        Args:
            config: Overrides applied after every config file
            debug: Force DEBUG logging
            config_file: Extra JSON settings file (from ``--config``)
        """
        self.container = ServiceContainer()
        self.debug = debug
        self.config = self._load_config(config, config_file)
        self._setup_logging()
        self._setup_services()

    def _load_config(
        self, config: Optional[Dict[str, Any]], config_file: Optional[Path]
    ) -> Dict[str, Any]:
        """Merge defaults, the user settings file, ``--config`` and overrides."""
        merged = copy.deepcopy(DEFAULT_CONFIG)
        for path in (CONFIG_FILE, config_file):
            if path is None or not Path(path).exists():
                continue
            try:
                with open(path, "r") as f:
                    merged = merge_config(merged, json.load(f))
            except (OSError, json.JSONDecodeError) as e:
                if path == config_file:
                    raise
                logger.warning(f"Failed to load config file {path}: {e}")
        if config:
            merged = merge_config(merged, config)
        return merged

    def _setup_logging(self) -> None:
        """Configure logging on stderr; stdout carries command output."""
        log_config = self.config.get("logging", {})
        level_name = "DEBUG" if self.debug else log_config.get("level", "WARNING")
        level = getattr(logging, str(level_name).upper(), logging.WARNING)
        format_str = log_config.get(
            "format", "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )

        handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
        if log_config.get("file"):
            log_path = Path(log_config["file"]).expanduser()
            log_path.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(log_path))

        logging.basicConfig(level=level, format=format_str, handlers=handlers, force=True)

    def _setup_services(self) -> None:
        """Register services with their configuration sections."""
        bench_config = self.config.get("bench", {})
        self.container.register_instance(
            "storage_service",
            StorageService(
                StorageConfig(output_dir=Path(bench_config.get("output_dir", ".")))
            ),
        )
        self.container.register("benchmark_service", BenchmarkService)
        names = ", ".join(self.container.get_all_service_names())
        logger.debug(f"Registered services: {names}")

    @property
    def benchmark(self) -> BenchmarkService:
        return self.container.get("benchmark_service")

    @property
    def storage(self) -> StorageService:
        return self.container.get("storage_service")

    @property
    def workers(self) -> int:
        return int(self.config.get("bench", {}).get("workers", 1))

    def planner_settings(self, planner_id: str) -> Dict[str, Any]:
        """Config section for a planner with unset values dropped."""
        section = self.config.get(planner_id, {})
        return {k: v for k, v in section.items() if v is not None}


def get_harness(ctx: Any) -> BenchHarness:
    """Harness stored on the click context, created on first use."""
    obj = ctx.ensure_object(dict)
    if "harness" not in obj:
        with reported_errors():
            obj["harness"] = BenchHarness(
                config=obj.get("config"),
                debug=obj.get("debug", False),
                config_file=obj.get("config_file"),
            )
    return obj["harness"]
