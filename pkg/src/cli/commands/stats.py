"""Stats command implementation."""

import click

from ...services import env_stats, resolve_env
from ..utils import console, get_harness, reported_errors, stats_table


@click.command()
@click.argument("env_source", metavar="ENV")
@click.option(
    "--format",
    "-f",
    type=click.Choice(["table", "json", "simple"]),
    default="table",
    help="Output format",
)
@click.pass_context
def stats(ctx, env_source, format):
    """📊 Show size statistics of an environment.

    \b
    Reports nodes, actions, condition edges per action (mean ± std),
    whether any effect consumes a feature, the episode cap and the
    state-space size 2^m.

    \b
    Examples:
      mip-delegate stats mining
      mip-delegate stats random:nodes=100,seed=3 -f json
    """
    get_harness(ctx)
    with reported_errors():
        result = env_stats(resolve_env(env_source))

    if format == "json":
        console.print_json(data=result.to_dict())
    elif format == "simple":
        for key, value in result.to_dict().items():
            click.echo(f"{key}: {value}")
    else:
        console.print(stats_table(result))
