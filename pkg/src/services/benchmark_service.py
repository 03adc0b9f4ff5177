"""Multi-seed episode batches and noise sweeps."""

import asyncio
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..models import (
    BenchmarkConfigError,
    BenchmarkSummary,
    Environment,
    Goal,
    InapplicablePlannerError,
    MemoryBudgetExceededError,
    NoiseSpec,
    QuantileRow,
    RunRecord,
    State,
    quantile_rows,
    summarize,
)
from .checker_service import check_well_formed
from .env_catalog import resolve_env
from .env_format import parse_assignments
from .planners import Planner, make_planner
from .storage_service import StorageService

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """One benchmark batch.

    ``goal`` and ``start`` are assignment lists such as ``hasSteelPlate=1``;
    None falls back to the environment's defaults.
    """

    env_source: str
    planner: str = "delegate"
    planner_settings: Dict[str, Any] = field(default_factory=dict)
    goal: Optional[str] = None
    start: Optional[str] = None
    noise: float = 0.0
    episodes: int = 10
    seed: int = 0
    episode_cap: Optional[int] = None
    force: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        if self.episodes < 1:
            raise BenchmarkConfigError(f"episodes must be at least 1, got {self.episodes}")
        if self.workers < 1:
            raise BenchmarkConfigError(f"workers must be at least 1, got {self.workers}")
        if not 0.0 <= self.noise <= 1.0:
            raise BenchmarkConfigError(f"noise must lie in [0, 1], got {self.noise}")


@dataclass(frozen=True)
class SweepConfig:
    """A batch configuration repeated over a grid of noise levels."""

    base: RunConfig
    grid: Tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.grid:
            raise BenchmarkConfigError("noise grid must not be empty")
        for p in self.grid:
            if not 0.0 <= p <= 1.0:
                raise BenchmarkConfigError(f"noise level {p} is outside [0, 1]")


@dataclass
class BenchmarkRun:
    """Records of one batch, sorted by episode, and their summary."""

    records: List[RunRecord]
    summary: BenchmarkSummary


@dataclass
class SweepRun:
    levels: List[BenchmarkRun]
    rows: List[QuantileRow]

    @property
    def records(self) -> List[RunRecord]:
        return [r for level in self.levels for r in level.records]


@dataclass(frozen=True)
class PreparedRun:
    """A RunConfig resolved against its environment."""

    env: Environment
    goal: Goal
    start: State


class BenchmarkService:
    """Runs benchmark batches and sweeps."""

    def __init__(self, storage_service: Optional[StorageService] = None):
        """Initialize benchmark service.

        Args:
            storage_service: Where result files go
        """
        self.storage = storage_service or StorageService()

    def prepare(self, cfg: RunConfig) -> PreparedRun:
        """Resolve environment, goal and start; check well-formedness unless forced.

        Raises:
            BenchmarkConfigError: If no goal is available or the environment is rejected
        """
        env = resolve_env(cfg.env_source)
        if cfg.goal is not None:
            goal = Goal(parse_assignments(cfg.goal, env))
        elif env.default_goal is not None:
            goal = env.default_goal
        else:
            raise BenchmarkConfigError(
                f"{env.name} has no default goal; pass one explicitly"
            )
        start = env.start
        if cfg.start is not None:
            start = State.zeros(env.m).with_bits(
                (p.feature, p.value) for p in parse_assignments(cfg.start, env)
            )

        if not cfg.force:
            report = check_well_formed(env)
            if not report.ok:
                findings = [f"cycle {' -> '.join(c)}" for c in report.cycles]
                findings += [f"unreachable {env.describe(p)}" for p in report.unreachable_goals]
                raise BenchmarkConfigError(
                    f"{env.name} is not well-formed ({'; '.join(findings)}); "
                    f"use force to run anyway"
                )
        return PreparedRun(env, goal, start)

    def _run_one(
        self,
        planner: Planner,
        prepared: PreparedRun,
        cfg: RunConfig,
        episode: int,
    ) -> RunRecord:
        seed = cfg.seed + episode
        rng = np.random.default_rng(seed)
        base = dict(
            env=prepared.env.name,
            planner=planner.name,
            noise=cfg.noise,
            seed=seed,
            episode=episode,
        )
        try:
            result = planner.run_episode(
                prepared.env, prepared.start, prepared.goal, NoiseSpec(cfg.noise), rng
            )
        except InapplicablePlannerError as e:
            logger.warning(f"{planner.name} is not applicable to {prepared.env.name}: {e}")
            return RunRecord(
                **base,
                success=False,
                executed_actions=0,
                planning_time_ms=0.0,
                failure_reason="inapplicable",
            )
        except MemoryBudgetExceededError as e:
            logger.warning(f"{planner.name} ran out of table memory: {e}")
            return RunRecord(
                **base,
                success=False,
                executed_actions=0,
                planning_time_ms=0.0,
                failure_reason="out-of-memory",
            )
        return RunRecord(
            **base,
            success=result.success,
            executed_actions=result.executed_actions,
            planning_time_ms=result.planning_time * 1000.0,
            failure_reason=result.failure_reason,
        )

    async def run_benchmark(self, cfg: RunConfig) -> BenchmarkRun:
        """Run ``cfg.episodes`` episodes with seeds ``cfg.seed + i``.

        Episodes run on worker threads, at most ``cfg.workers`` at a time.
        """
        prepared = self.prepare(cfg)
        try:
            planner = make_planner(cfg.planner, cfg.planner_settings, cfg.episode_cap)
        except ValueError as e:
            raise BenchmarkConfigError(str(e)) from e
        semaphore = asyncio.Semaphore(cfg.workers)

        async def episode(i: int) -> RunRecord:
            async with semaphore:
                return await asyncio.to_thread(self._run_one, planner, prepared, cfg, i)

        records = await asyncio.gather(*(episode(i) for i in range(cfg.episodes)))
        records = sorted(records, key=lambda r: r.episode)
        applicable = not all(r.failure_reason == "inapplicable" for r in records)
        summary = summarize(
            records,
            prepared.env.name,
            planner.name,
            cfg.noise,
            applicable=applicable,
        )
        logger.info(
            f"{planner.name} on {prepared.env.name} at noise {cfg.noise:g}: "
            f"{summary.render_success()} success, length {summary.render_length()}"
        )
        return BenchmarkRun(records, summary)

    async def noise_sweep(self, cfg: SweepConfig) -> SweepRun:
        """Run the base configuration once per noise level."""
        levels = []
        rows: List[QuantileRow] = []
        for p in cfg.grid:
            run = await self.run_benchmark(replace(cfg.base, noise=p))
            levels.append(run)
            rows.extend(
                quantile_rows(run.records, run.summary.env, run.summary.planner, p)
            )
        return SweepRun(levels, rows)


async def run_benchmark(cfg: RunConfig) -> BenchmarkRun:
    """Run a batch with a default service."""
    return await BenchmarkService().run_benchmark(cfg)


async def noise_sweep(cfg: SweepConfig) -> SweepRun:
    """Run a sweep with a default service."""
    return await BenchmarkService().noise_sweep(cfg)
