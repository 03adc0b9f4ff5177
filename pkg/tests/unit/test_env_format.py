"""Tests for the environment description format."""

import pytest

from src.models import EnvParseError, State
from src.services.env_catalog import BUILTIN_NAMES, builtin_env
from src.services.env_format import parse_assignments, parse_env, serialize_env
from src.services.generator_service import GeneratorSpec, gen_random_env

MINIMAL = """\
mipenv 1
name tiny
# comment lines and blank lines are ignored

feature hasA
feature hasB
action makeA needs - gives hasA=1   # trailing comment
action makeB needs hasA=1 gives hasA=0,hasB=1
start hasA=1
goal hasB=1
episodes 7
"""


class TestParse:
    """Test suite for parse_env."""

    def test_minimal_document(self):
        env = parse_env(MINIMAL)
        assert env.name == "tiny"
        assert env.features == ("hasA", "hasB")
        assert [a.name for a in env.actions] == ["makeA", "makeB"]
        assert env.start == State.from_string("10")
        assert env.default_goal == env.goal_from([("hasB", 1)])
        assert env.episode_cap == 7
        assert env.action_named("makeB").effect.is_consuming

    def test_defaults_without_optional_records(self):
        env = parse_env("mipenv 1\nfeature f\naction a needs - gives f=1\n", "fallback")
        assert env.name == "fallback"
        assert env.episode_cap == 100
        assert env.default_goal is None

    def test_steel_plate_builtin(self, steel):
        assert steel.m == 5
        assert len(steel.actions) == 5
        assert steel.episode_cap == 50

    @pytest.mark.parametrize(
        "text, line, fragment",
        [
            ("feature a\n", 1, "mipenv 1"),
            ("mipenv 2\n", 1, "version"),
            ("mipenv 1\nfeature a\nfeature a\n", 3, "duplicate feature"),
            ("mipenv 1\nfeature a\naction x needs b=1 gives a=1\n", 3, "unknown feature b"),
            ("mipenv 1\nfeature a\naction x needs - gives -\n", 3, "empty effect"),
            ("mipenv 1\nfeature a\naction x needs - gives a=2\n", 3, "malformed"),
            ("mipenv 1\nfeature a\nname late\n", 3, "directly follow"),
            ("mipenv 1\nfeature a\ngoal a=1\ngoal a=0\n", 4, "duplicate goal"),
            ("mipenv 1\nfeature a\nepisodes 0\n", 3, "positive"),
            ("mipenv 1\nfeature a\naction x needs a=1,a=0 gives a=1\n", 3, "more than once"),
            ("mipenv 1\nfrobnicate\n", 2, "malformed"),
        ],
    )
    def test_errors_carry_line(self, text, line, fragment):
        with pytest.raises(EnvParseError) as exc_info:
            parse_env(text)
        assert exc_info.value.line == line
        assert fragment in str(exc_info.value)

    def test_empty_document(self):
        with pytest.raises(EnvParseError, match="mipenv 1"):
            parse_env("# nothing here\n")


class TestSerialize:
    """Test suite for serialize_env."""

    def test_canonical_text(self):
        assert serialize_env(parse_env(MINIMAL)) == (
            "mipenv 1\n"
            "name tiny\n"
            "feature hasA\n"
            "feature hasB\n"
            "action makeA needs - gives hasA=1\n"
            "action makeB needs hasA=1 gives hasA=0,hasB=1\n"
            "start hasA=1\n"
            "goal hasB=1\n"
            "episodes 7\n"
        )

    @pytest.mark.parametrize("name", [n for n in BUILTIN_NAMES if n != "chain-k"] + ["chain-4"])
    def test_builtins_survive_reparse(self, name):
        env = builtin_env(name)
        assert parse_env(serialize_env(env)) == env

    def test_generated_environments_survive_reparse(self):
        for seed in range(100):
            spec = GeneratorSpec(n_nodes=25, consuming_fraction=0.3 if seed % 2 else 0.0, seed=seed)
            env = gen_random_env(spec)
            assert parse_env(serialize_env(env)) == env


class TestAssignments:
    """Test suite for parse_assignments."""

    def test_list(self, steel):
        props = parse_assignments("hasSteelPlate=1, hasStone=0", steel)
        assert props == (steel.proposition("hasSteelPlate"), steel.proposition("hasStone", 0))

    def test_dash_is_empty(self, steel):
        assert parse_assignments("-", steel) == ()

    def test_unknown_feature(self, steel):
        with pytest.raises(EnvParseError, match="hasGold"):
            parse_assignments("hasGold=1", steel)

    def test_malformed(self, steel):
        with pytest.raises(EnvParseError):
            parse_assignments("hasStone", steel)
