"""Integration tests for the mip-delegate command line."""

import csv
import io
import json

import pytest
from click.testing import CliRunner

from src._version import __version__
from src.cli.main import cli
from src.cli.utils import harness as harness_module
from src.models import CSV_HEADER, SWEEP_HEADER
from src.services import parse_env

GOALLESS_ENV = """mipenv 1
name goalless
feature hasWood
feature hasPlank
action getWood needs - gives hasWood=1
action makePlank needs hasWood=1 gives hasWood=0,hasPlank=1
episodes 10
"""


@pytest.fixture(autouse=True)
def no_user_settings(tmp_path, monkeypatch):
    monkeypatch.setattr(harness_module, "CONFIG_FILE", tmp_path / "absent" / "settings.json")


@pytest.fixture
def runner():
    return CliRunner()


class TestInspectionCommands:
    """check, stats, oracle, show and gen."""

    def test_oracle(self, runner):
        result = runner.invoke(cli, ["oracle", "builtin:steel-plate", "--goal", "hasSteelPlate=1"])
        assert result.exit_code == 0
        assert result.output.strip() == "5"

    def test_oracle_unreachable(self, runner):
        result = runner.invoke(cli, ["oracle", "circular-bad"])
        assert result.exit_code == 0
        assert result.output.strip() == "unreachable"

    def test_oracle_without_goal(self, runner, tmp_path):
        path = tmp_path / "goalless.mip"
        path.write_text(GOALLESS_ENV)
        result = runner.invoke(cli, ["oracle", str(path)])
        assert result.exit_code == 2
        assert "--goal" in result.output

    def test_stats_json(self, runner):
        result = runner.invoke(cli, ["stats", "chain-22", "-f", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["state_space_size"] == 4194304
        assert data["nodes"] == 22
        assert data["consuming"] is False

    def test_stats_simple(self, runner):
        result = runner.invoke(cli, ["stats", "steel-plate", "-f", "simple"])
        assert result.exit_code == 0
        assert "state_space_size: 32" in result.output
        assert "consuming: True" in result.output

    def test_check_well_formed(self, runner):
        result = runner.invoke(cli, ["check", "steel-plate"])
        assert result.exit_code == 0
        assert "Well-formed" in result.output

    def test_check_cycle_is_reported_not_an_error(self, runner):
        result = runner.invoke(cli, ["check", "circular-bad", "-f", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["ok"] is False
        assert data["cycles"]

    def test_check_strict_exits_1(self, runner):
        result = runner.invoke(cli, ["check", "circular-bad", "--strict"])
        assert result.exit_code == 1
        assert "Not well-formed" in result.output

    def test_check_strict_passes_well_formed(self, runner):
        assert runner.invoke(cli, ["check", "steel-plate", "--strict"]).exit_code == 0

    def test_unknown_env(self, runner):
        result = runner.invoke(cli, ["stats", "no-such-env"])
        assert result.exit_code == 1
        assert "neither a readable file nor a builtin" in result.output

    def test_parse_error(self, runner, tmp_path):
        path = tmp_path / "broken.mip"
        path.write_text("mipenv 1\nname broken\nfeature a\naction x needs b=1 gives a=1\n")
        result = runner.invoke(cli, ["show", str(path)])
        assert result.exit_code == 1
        assert "Parse error" in result.output

    def test_show_round_trips(self, runner):
        result = runner.invoke(cli, ["show", "two-providers"])
        assert result.exit_code == 0
        env = parse_env(result.output)
        assert env.name == "two-providers"
        assert len(env.actions) == 5

    def test_gen_to_file(self, runner, tmp_path):
        out = tmp_path / "random.mip"
        result = runner.invoke(cli, ["gen", "--nodes", "12", "--seed", "4", "-o", str(out)])
        assert result.exit_code == 0
        env = parse_env(out.read_text())
        assert env.m == 12
        assert len(env.actions) == 12

    def test_gen_to_stdout_is_deterministic(self, runner):
        first = runner.invoke(cli, ["gen", "--nodes", "8", "--seed", "2"])
        second = runner.invoke(cli, ["gen", "--nodes", "8", "--seed", "2"])
        assert first.exit_code == 0
        assert first.output == second.output
        assert first.output.startswith("mipenv 1")


class TestBatchCommands:
    """run and sweep."""

    def test_run_table(self, runner):
        result = runner.invoke(cli, ["run", "chain-2", "-n", "5"])
        assert result.exit_code == 0
        assert "100%" in result.output
        assert "2.0 ± 0.0" in result.output

    def test_run_json(self, runner):
        result = runner.invoke(cli, ["run", "chain-3", "-n", "2", "--seed", "5", "-f", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["summary"]["success"] == "100%"
        assert [r["seed"] for r in data["records"]] == [5, 6]
        assert data["records"][0]["reward"] == pytest.approx(1 / 3)

    def test_run_csv(self, runner):
        result = runner.invoke(cli, ["run", "chain-3", "-n", "3", "-f", "csv"])
        assert result.exit_code == 0
        rows = list(csv.reader(io.StringIO(result.output)))
        assert tuple(rows[0]) == CSV_HEADER
        assert [row[6] for row in rows[1:]] == ["3", "3", "3"]

    def test_run_writes_records(self, runner, tmp_path):
        out = tmp_path / "records.csv"
        result = runner.invoke(cli, ["run", "chain-2", "-n", "4", "-o", str(out)])
        assert result.exit_code == 0
        rows = list(csv.DictReader(out.open()))
        assert len(rows) == 4
        assert {row["success"] for row in rows} == {"1"}

    def test_run_without_goal_is_usage_error(self, runner, tmp_path):
        path = tmp_path / "goalless.mip"
        path.write_text(GOALLESS_ENV)
        result = runner.invoke(cli, ["run", str(path)])
        assert result.exit_code == 2
        assert "no default goal" in result.output

    def test_run_with_goal_on_goalless_env(self, runner, tmp_path):
        path = tmp_path / "goalless.mip"
        path.write_text(GOALLESS_ENV)
        result = runner.invoke(cli, ["run", str(path), "-g", "hasPlank=1", "-n", "2", "-f", "csv"])
        assert result.exit_code == 0
        rows = list(csv.DictReader(io.StringIO(result.output)))
        assert [row["executed_actions"] for row in rows] == ["2", "2"]

    def test_budget_rejected_for_delegate(self, runner):
        result = runner.invoke(cli, ["run", "chain-2", "--budget", "10"])
        assert result.exit_code == 2

    def test_rule_rejected_for_baseline(self, runner):
        result = runner.invoke(cli, ["run", "chain-2", "-p", "mcts", "--rule", "declaration-order"])
        assert result.exit_code == 2

    def test_ill_formed_env_needs_force(self, runner):
        refused = runner.invoke(cli, ["run", "circular-bad", "-n", "1"])
        assert refused.exit_code == 1
        assert "not well-formed" in refused.output

        forced = runner.invoke(cli, ["run", "circular-bad", "-n", "1", "--force"])
        assert forced.exit_code == 0
        assert "0%" in forced.output
        assert "100%" not in forced.output

    def test_mcts_budget(self, runner):
        result = runner.invoke(
            cli, ["run", "chain-2", "-p", "mcts", "--budget", "50", "-n", "2", "-f", "json"]
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["summary"]["success"] == "100%"

    def test_sweep_files(self, runner, tmp_path):
        out = tmp_path / "sweep.csv"
        records = tmp_path / "records.csv"
        result = runner.invoke(
            cli,
            ["sweep", "chain-2", "--grid", "0,0.5", "-n", "3", "-o", str(out), "--records", str(records)],
        )
        assert result.exit_code == 0
        assert "Quartiles" in result.output

        sweep_rows = list(csv.reader(out.open()))
        assert tuple(sweep_rows[0]) == SWEEP_HEADER
        assert len(sweep_rows) == 1 + 2 * 3
        assert len(list(csv.DictReader(records.open()))) == 6

    def test_sweep_bad_grid(self, runner):
        result = runner.invoke(cli, ["sweep", "chain-2", "--grid", "0,2"])
        assert result.exit_code == 2
        assert "outside [0, 1]" in result.output


class TestGlobalOptions:
    """Version and configuration handling."""

    def test_version(self, runner):
        result = runner.invoke(cli, ["version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_version_flag(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert f"mip-delegate v{__version__}" in result.output

    def test_bad_config_json(self, runner, tmp_path):
        config = tmp_path / "bad.json"
        config.write_text("{not json")
        result = runner.invoke(cli, ["--config", str(config), "stats", "steel-plate"])
        assert result.exit_code == 1
        assert "Invalid JSON" in result.output

    def test_config_sets_workers_and_budget(self, runner, tmp_path):
        config = tmp_path / "settings.json"
        config.write_text(json.dumps({"mcts": {"budget": 30}, "bench": {"workers": 2}}))
        result = runner.invoke(
            cli, ["--config", str(config), "run", "chain-2", "-p", "mcts", "-n", "2", "-f", "json"]
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["summary"]["success"] == "100%"

    def test_version_json_lists_libraries(self, runner):
        result = runner.invoke(cli, ["version", "--format", "json"])
        assert result.exit_code == 0
        info = json.loads(result.output)
        assert info["version"] == __version__
        assert set(info["libraries"]) == {"numpy", "networkx", "pyparsing", "click", "rich"}
