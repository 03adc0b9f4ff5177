"""Run command implementation."""

import asyncio
import logging

import click

from ..utils import (
    batch_options,
    build_run_config,
    console,
    get_harness,
    reported_errors,
    summary_table,
)

logger = logging.getLogger(__name__)


@click.command()
@batch_options
@click.option(
    "--noise",
    type=click.FloatRange(0.0, 1.0),
    default=0.0,
    show_default=True,
    help="Probability of one random feature flip per step",
)
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False),
    help="Write per-episode records to this CSV file",
)
@click.option(
    "--format",
    "-f",
    type=click.Choice(["table", "json", "csv"]),
    default="table",
    help="Output format on stdout",
)
@click.pass_context
def run(ctx, env_source, planner, budget, rule, goal, start, episodes, seed, cap,
        workers, force, noise, out, format):
    """🚀 Run a multi-seed episode batch and summarize it.

    \b
    Episode i runs with seed SEED + i. Length and time are averaged over
    successful episodes only; "--" means no episode succeeded and "N/A"
    that the planner does not apply to the environment.

    \b
    Examples:
      mip-delegate run steel-plate -n 10
      mip-delegate run mining-v2 -p mcts --budget 500 --noise 0.1 -o mcts.csv
      mip-delegate run chain-6 -p qlearn --budget 2000 -f csv
    """
    harness = get_harness(ctx)
    with reported_errors():
        cfg = build_run_config(
            harness, env_source, planner, budget, rule, goal, start,
            episodes, seed, cap, workers, force, noise=noise,
        )
        result = asyncio.run(harness.benchmark.run_benchmark(cfg))
        if out:
            path = asyncio.run(harness.storage.write_records(out, result.records))
            logger.info(f"Records written to {path}")

    if format == "json":
        console.print_json(
            data={
                "summary": result.summary.to_dict(),
                "records": [r.to_dict() for r in result.records],
            }
        )
    elif format == "csv":
        click.echo(harness.storage.render_records(result.records), nl=False)
    else:
        console.print(summary_table([result.summary], title="Benchmark"))
