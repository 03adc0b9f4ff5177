"""Episode results, benchmark records and their aggregates."""

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .plan import Plan, plan_reward
from .state import State

CSV_HEADER = (
    "env",
    "planner",
    "noise",
    "seed",
    "episode",
    "success",
    "executed_actions",
    "planning_time_ms",
    "failure_reason",
)

SWEEP_HEADER = ("env", "planner", "noise", "metric", "median", "q25", "q75", "count")


@dataclass(frozen=True)
class EpisodeResult:
    """Outcome of one planning episode.

    Times are wall-clock seconds. ``planning_time`` covers planner decisions
    only; ``training_time`` is reported separately for learners.
    """

    success: bool
    executed_actions: int
    trace: Plan
    states: Tuple[State, ...]
    planning_time: float
    per_step_times: Tuple[float, ...] = ()
    actions: Tuple[str, ...] = ()
    failed_actions: int = 0
    failure_reason: Optional[str] = None
    training_time: float = 0.0

    @property
    def final_state(self) -> State:
        return self.states[-1]

    @property
    def reward(self) -> float:
        """Inverse executed length on success, 0 on failure."""
        return float(plan_reward(self.success, self.trace))


@dataclass(frozen=True)
class RunRecord:
    """One row of benchmark output."""

    env: str
    planner: str
    noise: float
    seed: int
    episode: int
    success: bool
    executed_actions: int
    planning_time_ms: float
    failure_reason: Optional[str] = None

    def to_row(self) -> List[str]:
        return [
            self.env,
            self.planner,
            f"{self.noise:g}",
            str(self.seed),
            str(self.episode),
            "1" if self.success else "0",
            str(self.executed_actions),
            f"{self.planning_time_ms:.3f}",
            self.failure_reason or "",
        ]

    @property
    def reward(self) -> float:
        """Inverse executed length on success, 0 on failure."""
        if not self.success:
            return 0.0
        return 1.0 / self.executed_actions if self.executed_actions else 1.0

    def to_dict(self) -> Dict[str, Any]:
        return {**asdict(self), "reward": self.reward}

    @classmethod
    def from_row(cls, row: Dict[str, str]) -> "RunRecord":
        return cls(
            env=row["env"],
            planner=row["planner"],
            noise=float(row["noise"]),
            seed=int(row["seed"]),
            episode=int(row["episode"]),
            success=row["success"] == "1",
            executed_actions=int(row["executed_actions"]),
            planning_time_ms=float(row["planning_time_ms"]),
            failure_reason=row.get("failure_reason") or None,
        )


@dataclass(frozen=True)
class MeanStd:
    mean: float
    std: float

    def render(self, digits: int = 1) -> str:
        return f"{self.mean:.{digits}f} ± {self.std:.{digits}f}"


@dataclass(frozen=True)
class BenchmarkSummary:
    """Aggregate over a batch of records.

    Length and time statistics use successful episodes only. ``applicable``
    is false when the planner refused the environment.
    """

    env: str
    planner: str
    noise: float
    episodes: int
    successes: int
    length: Optional[MeanStd]
    time_ms: Optional[MeanStd]
    applicable: bool = True
    note: Optional[str] = None

    @property
    def success_rate(self) -> float:
        return self.successes / self.episodes if self.episodes else 0.0

    def render_success(self) -> str:
        if not self.applicable:
            return "N/A"
        return f"{100.0 * self.success_rate:.0f}%"

    def render_length(self) -> str:
        if not self.applicable:
            return "N/A"
        return self.length.render() if self.length else "--"

    def render_time(self) -> str:
        if not self.applicable:
            return "N/A"
        return self.time_ms.render(digits=3) if self.time_ms else "--"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "env": self.env,
            "planner": self.planner,
            "noise": self.noise,
            "success": self.render_success(),
            "length": self.render_length(),
            "time_ms": self.render_time(),
        }


def _mean_std(values: Sequence[float]) -> Optional[MeanStd]:
    if not values:
        return None
    arr = np.asarray(values, dtype=float)
    return MeanStd(float(arr.mean()), float(arr.std()))


def summarize(
    records: Sequence[RunRecord],
    env: str,
    planner: str,
    noise: float,
    applicable: bool = True,
    note: Optional[str] = None,
) -> BenchmarkSummary:
    """Aggregate records; failures never enter length or time statistics."""
    wins = [r for r in records if r.success]
    return BenchmarkSummary(
        env=env,
        planner=planner,
        noise=noise,
        episodes=len(records),
        successes=len(wins),
        length=_mean_std([r.executed_actions for r in wins]),
        time_ms=_mean_std([r.planning_time_ms for r in wins]),
        applicable=applicable,
        note=note,
    )


@dataclass(frozen=True)
class QuantileRow:
    """One summary row of a noise sweep."""

    env: str
    planner: str
    noise: float
    metric: str
    median: Optional[float]
    q25: Optional[float]
    q75: Optional[float]
    count: int

    def to_row(self) -> List[str]:
        def fmt(v: Optional[float]) -> str:
            return "" if v is None else f"{v:g}"

        return [
            self.env,
            self.planner,
            f"{self.noise:g}",
            self.metric,
            fmt(self.median),
            fmt(self.q25),
            fmt(self.q75),
            str(self.count),
        ]


def quantile_rows(
    records: Sequence[RunRecord], env: str, planner: str, noise: float
) -> List[QuantileRow]:
    """Median and quartiles of length, time and success for one noise level."""
    wins = [r for r in records if r.success]
    rows = []
    metrics: Dict[str, List[float]] = {
        "length": [float(r.executed_actions) for r in wins],
        "time_ms": [r.planning_time_ms for r in wins],
    }
    for metric, values in metrics.items():
        if values:
            q25, median, q75 = np.percentile(values, [25, 50, 75])
            rows.append(
                QuantileRow(env, planner, noise, metric, float(median), float(q25), float(q75), len(values))
            )
        else:
            rows.append(QuantileRow(env, planner, noise, metric, None, None, None, 0))
    success = [1.0 if r.success else 0.0 for r in records]
    rows.append(
        QuantileRow(
            env,
            planner,
            noise,
            "success",
            float(np.mean(success)) if success else None,
            None,
            None,
            len(wins),
        )
    )
    return rows

