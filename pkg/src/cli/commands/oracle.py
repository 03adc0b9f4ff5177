"""Oracle command implementation."""

import click

from ...models import Goal, State
from ...services import bfs_oracle, parse_assignments, resolve_env
from ..utils import get_harness, reported_errors


@click.command()
@click.argument("env_source", metavar="ENV")
@click.option("--goal", "-g", help="Goal assignments (default: the environment's goal)")
@click.option("--start", "-s", help="Start assignments (default: the environment's start)")
@click.pass_context
def oracle(ctx, env_source, goal, start):
    """🎯 Print the optimal noise-free plan length.

    \b
    Runs breadth-first search over the full state space, so it is limited
    to small environments. Prints "unreachable" when no goal state can be
    reached from the start.

    \b
    Examples:
      mip-delegate oracle builtin:steel-plate --goal hasSteelPlate=1
      mip-delegate oracle chain-8
    """
    get_harness(ctx)
    with reported_errors():
        env = resolve_env(env_source)
        if goal is not None:
            target = Goal(parse_assignments(goal, env))
        elif env.default_goal is not None:
            target = env.default_goal
        else:
            raise click.UsageError(f"{env.name} has no default goal; pass one with --goal")

        s0 = env.start
        if start is not None:
            s0 = State.zeros(env.m).with_bits(
                (p.feature, p.value) for p in parse_assignments(start, env)
            )
        length = bfs_oracle(env, s0, target)

    click.echo("unreachable" if length is None else str(length))
