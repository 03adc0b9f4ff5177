"""Options shared by the batch commands."""

from typing import Any, Callable, Optional

import click

from ...services import PLANNER_IDS, RunConfig, resolve_env
from .harness import BenchHarness

# Planner setting that --budget controls
BUDGET_SETTING = {
    "mcts": "budget",
    "rrt": "max_nodes",
    "qlearn": "training_episodes",
}


def batch_options(func: Callable) -> Callable:
    """Environment, planner and episode options of ``run`` and ``sweep``."""
    options = [
        click.argument("env_source", metavar="ENV"),
        click.option(
            "--planner",
            "-p",
            type=click.Choice(PLANNER_IDS),
            default="delegate",
            show_default=True,
            help="Planner to benchmark",
        ),
        click.option(
            "--budget",
            type=click.IntRange(min=1),
            help="MCTS simulations, RRT nodes or Q-learning training episodes",
        ),
        click.option(
            "--rule",
            type=click.Choice(["fewest-unmet", "declaration-order"]),
            help="Delegate candidate rule",
        ),
        click.option("--goal", "-g", help="Goal assignments, e.g. hasSteelPlate=1"),
        click.option("--start", "-s", help="Start assignments; unset features are 0"),
        click.option(
            "--episodes",
            "-n",
            type=click.IntRange(min=1),
            default=10,
            show_default=True,
            help="Episodes per batch",
        ),
        click.option("--seed", type=int, default=0, show_default=True, help="Base seed"),
        click.option("--cap", type=click.IntRange(min=1), help="Episode cap override"),
        click.option(
            "--workers",
            "-w",
            type=click.IntRange(min=1),
            help="Concurrent episodes (default from config)",
        ),
        click.option("--force", is_flag=True, help="Run even if the environment is ill-formed"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_run_config(
    harness: BenchHarness,
    env_source: str,
    planner: str,
    budget: Optional[int],
    rule: Optional[str],
    goal: Optional[str],
    start: Optional[str],
    episodes: int,
    seed: int,
    cap: Optional[int],
    workers: Optional[int],
    force: bool,
    noise: float = 0.0,
) -> RunConfig:
    """Merge configured planner settings with command-line flags.

    Raises:
        click.UsageError: On a goal-less environment without --goal, or a
            flag that does not apply to the chosen planner
    """
    settings: dict[str, Any] = harness.planner_settings(planner)
    if budget is not None:
        if planner not in BUDGET_SETTING:
            raise click.UsageError(
                f"--budget applies to {', '.join(BUDGET_SETTING)}, not {planner}"
            )
        settings[BUDGET_SETTING[planner]] = budget
    if rule is not None:
        if planner != "delegate":
            raise click.UsageError("--rule applies to the delegate planner only")
        settings["candidate_rule"] = rule

    if goal is None and resolve_env(env_source).default_goal is None:
        raise click.UsageError(
            f"{env_source} has no default goal; pass one with --goal"
        )

    return RunConfig(
        env_source=env_source,
        planner=planner,
        planner_settings=settings,
        goal=goal,
        start=start,
        noise=noise,
        episodes=episodes,
        seed=seed,
        episode_cap=cap,
        force=force,
        workers=workers or harness.workers,
    )
