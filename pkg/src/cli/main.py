"""CLI entry point for mip-delegate.

Benchmark harness for on-demand hierarchical planning by skill delegation,
with the MCTS, RRT and Q-learning baselines.
"""

import json

import click

from .._version import __version__, get_version_info
from .commands import check, gen, oracle, run, show, stats, sweep
from .utils import console, show_version_info


@click.group(
    invoke_without_command=True,
    context_settings=dict(help_option_names=["-h", "--help"]),
)
@click.option("--version", "-v", is_flag=True, help="Show version information")
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.option(
    "--config", type=click.Path(exists=True, dir_okay=False), help="Path to configuration file"
)
@click.pass_context
def cli(ctx, version, debug, config):
    """🧭 mip-delegate - hierarchical planning by skill delegation.

    \b
    Plans are built on demand: each skill appears as a reference and is
    expanded only when execution reaches it, from the state at that time.

    \b
    Quick Start:
      1. mip-delegate check steel-plate
      2. mip-delegate run steel-plate -n 10
      3. mip-delegate sweep mining --grid 0,0.25,0.5 -o sweep.csv

    \b
    ENV arguments accept builtin names (steel-plate, chain-<k>, diamond,
    circular-bad, two-providers, mining, mining-v2), builtin:<name>,
    random:<key=value,...> and environment file paths.

    \b
    For detailed help on any command, use:
      mip-delegate COMMAND --help
    """
    ctx.ensure_object(dict)
    ctx.obj["debug"] = debug
    ctx.obj["config_file"] = config

    if version:
        show_version_info()
        ctx.exit()

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


VERSION_FORMATS = ("short", "table", "json")


@cli.command()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(VERSION_FORMATS),
    default="short",
    show_default=True,
    help="short: version only; table: build and library versions; json: the same as JSON",
)
def version(fmt):
    """📦 Show the version and the library versions benchmarks ran against."""
    if fmt == "table":
        show_version_info()
    elif fmt == "json":
        click.echo(json.dumps(get_version_info(), indent=2))
    else:
        console.print(f"[bold]mip-delegate[/bold] [cyan]{__version__}[/cyan]")


# Register command modules
cli.add_command(check)
cli.add_command(stats)
cli.add_command(oracle)
cli.add_command(gen)
cli.add_command(show)
cli.add_command(run)
cli.add_command(sweep)


def main():
    cli(prog_name="mip-delegate")


if __name__ == "__main__":
    main()
