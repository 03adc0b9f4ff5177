"""Sweep command implementation."""

import asyncio

import click

from ...services import SweepConfig
from ..utils import (
    batch_options,
    build_run_config,
    console,
    get_harness,
    quantile_table,
    reported_errors,
    summary_table,
)


def parse_grid(ctx, param, value):
    """Comma-separated noise levels, e.g. ``0,0.25,0.5``."""
    try:
        grid = tuple(float(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got '{value}'")
    if not grid:
        raise click.BadParameter("at least one noise level is required")
    for p in grid:
        if not 0.0 <= p <= 1.0:
            raise click.BadParameter(f"noise level {p:g} is outside [0, 1]")
    return grid


@click.command()
@batch_options
@click.option(
    "--grid",
    default="0,0.1,0.25,0.5",
    show_default=True,
    callback=parse_grid,
    help="Comma-separated noise levels",
)
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False),
    help="Write median/quartile rows to this CSV file",
)
@click.option(
    "--records",
    type=click.Path(dir_okay=False),
    help="Write per-episode records of every level to this CSV file",
)
@click.pass_context
def sweep(ctx, env_source, planner, budget, rule, goal, start, episodes, seed, cap,
          workers, force, grid, out, records):
    """📈 Run one batch per noise level and report quartiles.

    \b
    For each level the summary holds median, 25% and 75% quartiles of
    length and planning time over successful episodes, and the success
    rate with its count.

    \b
    Examples:
      mip-delegate sweep steel-plate --grid 0,0.25,0.5 -n 50
      mip-delegate sweep mining -p mcts --budget 300 -o sweep.csv --records runs.csv
    """
    harness = get_harness(ctx)
    with reported_errors():
        base = build_run_config(
            harness, env_source, planner, budget, rule, goal, start,
            episodes, seed, cap, workers, force,
        )
        result = asyncio.run(harness.benchmark.noise_sweep(SweepConfig(base, grid)))
        if out:
            asyncio.run(harness.storage.write_sweep(out, result.rows))
        if records:
            asyncio.run(harness.storage.write_records(records, result.records))

    console.print(summary_table([level.summary for level in result.levels], title="Noise sweep"))
    console.print(quantile_table(result.rows))
