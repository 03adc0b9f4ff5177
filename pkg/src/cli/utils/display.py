"""Display utilities for CLI output."""

import sys
from typing import Iterable, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..._version import get_version_info
from ...models import BenchmarkSummary, Environment, QuantileRow
from ...services.checker_service import WellFormedReport
from ...services.env_catalog import EnvStats

# Create console for rich output
console = Console()


def show_version_info() -> None:
    """Print version, build and library versions as a rich table."""
    info = get_version_info()

    table = Table(title=f"{info['title']} v{info['version']}", show_header=False)
    table.add_column("Key", style="cyan", width=14)
    table.add_column("Value")
    table.add_row("Version", info["full_version"])
    if info["git_commit"]:
        table.add_row("Git commit", info["git_commit"])
    table.add_row("Description", info["description"])
    table.add_row("License", info["license"])
    table.add_row("Python", sys.version.split()[0])
    table.add_row("Platform", sys.platform)
    for name, version in info["libraries"].items():
        table.add_row(name, version)
    console.print(table)

def stats_table(stats: EnvStats) -> Table:
    table = Table(title=f"Environment {escape(stats.name)}", show_header=False)
    table.add_column("Statistic", style="cyan", width=22)
    table.add_column("Value")
    for key, value in stats.to_dict().items():
        if key == "name":
            continue
        table.add_row(key.replace("_", " "), escape(str(value)))
    return table


def report_table(env: Environment, report: WellFormedReport) -> Table:
    """Well-formedness findings, one row per finding."""
    table = Table(title=f"Checks for {escape(env.name)}")
    table.add_column("Check", style="cyan", width=18)
    table.add_column("Result")

    if report.cycles:
        for cycle in report.cycles:
            table.add_row("cycle", f"[red]✗ {escape(' -> '.join(cycle))}[/red]")
    else:
        table.add_row("cycles", "[green]✓ none[/green]")

    if report.unreachable_goals:
        for goal in report.unreachable_goals:
            table.add_row("unreachable", f"[red]✗ {escape(env.describe(goal))}[/red]")
    else:
        table.add_row("reachability", "[green]✓ every feature value reachable[/green]")

    for caveat in report.caveats:
        table.add_row("caveat", f"[yellow]⚠ {escape(caveat)}[/yellow]")
    return table


def summary_table(summaries: Iterable[BenchmarkSummary], title: str = "Benchmark") -> Table:
    table = Table(title=title)
    for column in ("Env", "Planner", "Noise", "Episodes", "Success", "Length", "Time (ms)"):
        table.add_column(column)
    for s in summaries:
        table.add_row(
            escape(s.env),
            s.planner,
            f"{s.noise:g}",
            str(s.episodes),
            s.render_success(),
            s.render_length(),
            s.render_time(),
        )
    return table


def quantile_table(rows: Sequence[QuantileRow]) -> Table:
    """Median and quartiles per noise level and metric."""
    table = Table(title="Quartiles")
    for column in ("Noise", "Metric", "Median", "Q25", "Q75", "Count"):
        table.add_column(column)
    for row in rows:
        cells = row.to_row()
        table.add_row(*cells[2:])
    return table
