"""Check command implementation."""

import click

from ...services import check_well_formed, resolve_env
from ..utils import console, get_harness, report_table, reported_errors


@click.command()
@click.argument("env_source", metavar="ENV")
@click.option(
    "--format",
    "-f",
    type=click.Choice(["table", "json"]),
    default="table",
    help="Output format",
)
@click.option(
    "--strict", is_flag=True, help="Exit with status 1 when the environment is not well-formed"
)
@click.pass_context
def check(ctx, env_source, format, strict):
    """🔍 Check an environment for cycles and unreachable goals.

    \b
    ENV is a builtin name (steel-plate, chain-5, ...), builtin:<name>,
    random:<key=value,...> or a path to an environment file.

    \b
    Findings are reported, not treated as errors; pass --strict to
    exit with status 1 on an ill-formed environment.

    \b
    Examples:
      mip-delegate check steel-plate
      mip-delegate check circular-bad -f json
    """
    get_harness(ctx)
    with reported_errors():
        env = resolve_env(env_source)
        report = check_well_formed(env)

    if format == "json":
        console.print_json(
            data={
                "env": env.name,
                "ok": report.ok,
                "cycles": report.cycles,
                "unreachable_goals": [env.describe(p) for p in report.unreachable_goals],
                "caveats": report.caveats,
            }
        )
    else:
        console.print(report_table(env, report))
        if report.ok:
            console.print("[green]✓ Well-formed[/green]")
        else:
            console.print("[red]✗ Not well-formed[/red]")

    if strict and not report.ok:
        ctx.exit(1)
