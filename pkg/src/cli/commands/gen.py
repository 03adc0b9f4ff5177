"""Gen command implementation."""

import click

from ...services import GeneratorSpec, env_stats, gen_random_env, serialize_env
from ..utils import get_harness, reported_errors


@click.command()
@click.option("--nodes", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--edge-mean", type=float, default=1.32, show_default=True)
@click.option("--edge-std", type=float, default=0.71, show_default=True)
@click.option("--edge-max", type=click.IntRange(min=0), default=4, show_default=True)
@click.option(
    "--consuming-frac",
    type=click.FloatRange(0.0, 1.0),
    default=0.0,
    show_default=True,
    help="Probability that a condition edge consumes its parent",
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--episodes", type=click.IntRange(min=1), default=100, show_default=True)
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, writable=True, allow_dash=True),
    default="-",
    help="Output file (default: stdout)",
)
@click.pass_context
def gen(ctx, nodes, edge_mean, edge_std, edge_max, consuming_frac, seed, episodes, out):
    """🎲 Generate a random acyclic dependency-graph environment.

    \b
    Every node becomes one feature and one action setting it. Parents are
    drawn only from earlier nodes, so the result is always well-formed.

    \b
    Examples:
      mip-delegate gen --nodes 100 --seed 7 -o random100.mip
      mip-delegate gen --nodes 30 --consuming-frac 0.3
    """
    get_harness(ctx)
    with reported_errors():
        try:
            spec = GeneratorSpec(
                n_nodes=nodes,
                edge_mean=edge_mean,
                edge_std=edge_std,
                edge_max=edge_max,
                consuming_fraction=consuming_frac,
                seed=seed,
                episode_cap=episodes,
            )
        except ValueError as e:
            raise click.BadParameter(str(e)) from e
        env = gen_random_env(spec)
        with click.open_file(out, "w") as f:
            f.write(serialize_env(env))

    if out != "-":
        result = env_stats(env)
        click.echo(
            f"Wrote {env.name} to {out}: {result.nodes} nodes, "
            f"{result.edges_mean:.2f} ± {result.edges_std:.2f} edges per node",
            err=True,
        )
