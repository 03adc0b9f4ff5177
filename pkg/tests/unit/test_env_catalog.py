"""Tests for builtin environments, environment sources and statistics."""

import pytest

from src.models import UnknownEnvironmentError
from src.services.env_catalog import (
    bundled_envs,
    builtin_env,
    chain_env,
    env_stats,
    resolve_env,
)
from src.services.env_format import serialize_env


class TestBuiltins:
    """Test suite for builtin_env."""

    def test_chain(self):
        env = chain_env(4)
        assert env.name == "chain-4"
        assert env.features == ("f0", "f1", "f2", "f3")
        assert [len(a.condition) for a in env.actions] == [0, 1, 1, 1]
        assert env.default_goal == env.goal_from([("f3", 1)])
        assert env.episode_cap == 20
        assert chain_env(10).episode_cap == 40

    def test_chain_by_name(self):
        assert builtin_env("chain-6") == chain_env(6)

    def test_chain_length_positive(self):
        with pytest.raises(UnknownEnvironmentError):
            builtin_env("chain-0")

    def test_unknown(self):
        with pytest.raises(UnknownEnvironmentError, match="steel-plate"):
            builtin_env("factorio")

    def test_bundled_files(self):
        names = [env.name for env in bundled_envs()]
        assert names == sorted(names)
        assert names.index("mining") < names.index("mining-v2")
        assert {"steel-plate", "diamond", "circular-bad", "two-providers", "mining", "mining-v2"} <= set(names)

    def test_mining_variants_share_graph(self):
        mining, v2 = builtin_env("mining"), builtin_env("mining-v2")
        assert mining.features == v2.features
        assert [a.condition for a in mining.actions] == [a.condition for a in v2.actions]
        assert not mining.is_consuming
        assert v2.is_consuming


class TestResolve:
    """Test suite for resolve_env."""

    def test_builtin_prefix_and_bare_name(self):
        assert resolve_env("builtin:diamond") == resolve_env("diamond")

    def test_random_source(self):
        env = resolve_env("random:nodes=12,seed=3,consuming=0.5")
        assert env.name == "random-n12-s3"
        assert env.m == 12

    def test_random_source_rejects_unknown_key(self):
        with pytest.raises(UnknownEnvironmentError):
            resolve_env("random:colour=blue")

    def test_random_source_rejects_bare_word(self):
        with pytest.raises(UnknownEnvironmentError):
            resolve_env("random:nodes")

    def test_file_source(self, tmp_path, steel):
        path = tmp_path / "copy.mip"
        path.write_text(serialize_env(steel))
        assert resolve_env(str(path)) == steel

    def test_unknown_source(self):
        with pytest.raises(UnknownEnvironmentError, match="neither"):
            resolve_env("no/such/file.mip")


class TestStats:
    """Test suite for env_stats."""

    def test_steel_plate(self, steel):
        stats = env_stats(steel)
        assert (stats.nodes, stats.actions) == (5, 5)
        assert stats.edges_mean == pytest.approx(1.2)
        assert stats.edges_std == pytest.approx(1.36**0.5)
        assert stats.consuming
        assert stats.episode_cap == 50
        assert stats.state_space_size == 32

    def test_state_space_of_22_features(self):
        assert env_stats(chain_env(22)).state_space_size == 4194304

    def test_to_dict(self, steel):
        data = env_stats(steel).to_dict()
        assert data["edges_per_node"] == "1.20 ± 1.17"
        assert data["name"] == "steel-plate"
