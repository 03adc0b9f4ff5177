"""Show command implementation."""

import click

from ...services import resolve_env, serialize_env
from ..utils import get_harness, reported_errors


@click.command()
@click.argument("env_source", metavar="ENV")
@click.pass_context
def show(ctx, env_source):
    """📄 Print the canonical document of an environment.

    \b
    Examples:
      mip-delegate show steel-plate
      mip-delegate show random:nodes=30,seed=1 > random30.mip
    """
    get_harness(ctx)
    with reported_errors():
        text = serialize_env(resolve_env(env_source))
    click.echo(text, nl=False)
