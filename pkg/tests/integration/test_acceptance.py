"""End-to-end acceptance runs over bundled and generated environments."""

import asyncio

import numpy as np
import pytest

from src.models import Goal, NoiseSpec, Proposition
from src.services import (
    BenchmarkService,
    GeneratorSpec,
    PlannerConfig,
    RunConfig,
    SweepConfig,
    bfs_oracle,
    builtin_env,
    gen_random_env,
    make_planner,
    run_episode,
)
from src.services.baselines import MctsConfig, MctsPlanner
from src.services.env_catalog import bundled_envs

NOISE_FREE = NoiseSpec(0.0)

pytestmark = pytest.mark.slow


def delegate(env, goal=None, noise=NOISE_FREE, seed=0, cap=None):
    return run_episode(
        env,
        env.start,
        goal or env.default_goal,
        PlannerConfig(episode_cap=cap),
        noise,
        np.random.default_rng(seed),
    )


class TestDelegateOptimality:
    """Delegate against the breadth-first oracle."""

    @pytest.mark.parametrize("env", bundled_envs(), ids=lambda env: env.name)
    def test_single_feature_goals(self, env):
        for feature in range(env.m):
            goal = Goal((Proposition(feature, 1),))
            optimal = bfs_oracle(env, env.start, goal)
            if optimal is None:
                continue
            result = delegate(env, goal)
            name = env.features[feature]
            assert result.success, f"{name}: {result.failure_reason}"
            if env.is_consuming:
                assert result.executed_actions <= 1.25 * optimal, name
            else:
                assert result.executed_actions == optimal, name

    @pytest.mark.parametrize("k", range(1, 11))
    def test_chain(self, k):
        env = builtin_env(f"chain-{k}")
        result = delegate(env)
        assert result.success
        assert result.executed_actions == k == bfs_oracle(env, env.start, env.default_goal)

    def test_mining(self):
        result = delegate(builtin_env("mining"))
        assert result.success
        assert result.executed_actions == 12

    def test_mining_v2(self):
        result = delegate(builtin_env("mining-v2"))
        assert result.success
        assert result.executed_actions == 23

    @pytest.mark.parametrize("seed", range(20))
    def test_generated_matches_oracle(self, seed):
        env = gen_random_env(GeneratorSpec(n_nodes=14, seed=seed))
        result = delegate(env)

        assert result.success
        assert result.executed_actions == bfs_oracle(env, env.start, env.default_goal)


class TestDelegateExecution:
    """Execution properties over many episodes."""

    def test_no_action_runs_twice_without_consumption(self):
        for seed in range(50):
            env = gen_random_env(GeneratorSpec(n_nodes=20 + seed % 41, seed=seed))
            result = delegate(env)
            assert result.success, f"seed {seed}"
            assert len(set(result.actions)) == len(result.actions), f"seed {seed}"

    def test_only_applicable_actions_are_executed(self):
        levels = (0.0, 0.05, 0.5)
        steps = 0
        seed = 0
        while steps < 10_000:
            spec = GeneratorSpec(
                n_nodes=15,
                consuming_fraction=0.3 if seed % 2 else 0.0,
                seed=seed,
                episode_cap=300,
            )
            env = gen_random_env(spec)
            for episode, p in enumerate(levels):
                result = delegate(env, noise=NoiseSpec(p), seed=1000 * seed + episode)
                assert result.failed_actions == 0
                steps += result.executed_actions
            seed += 1
            assert seed < 5_000

    def test_steel_plate_under_noise(self, steel):
        results = [delegate(steel, noise=NoiseSpec(0.05), seed=seed, cap=20) for seed in range(100)]
        assert sum(r.success for r in results) >= 99
        assert all(r.failed_actions == 0 for r in results)

    def test_generated_under_noise(self):
        env = gen_random_env(GeneratorSpec(n_nodes=20, seed=0))
        nominal = delegate(env).executed_actions
        results = [
            delegate(env, noise=NoiseSpec(0.05), seed=seed, cap=4 * nominal) for seed in range(100)
        ]
        assert sum(r.success for r in results) >= 99

    def test_full_noise_sweep_still_succeeds(self):
        service = BenchmarkService()
        sweep = asyncio.run(
            service.noise_sweep(
                SweepConfig(RunConfig("chain-2", episodes=50, episode_cap=200), (1.0,))
            )
        )
        assert sweep.levels[0].summary.success_rate >= 0.9


class TestBaselineComparison:
    """Delegate against the search baselines."""

    def test_mcts_spends_far_more_planning_time(self):
        env = gen_random_env(GeneratorSpec(n_nodes=20, seed=0))
        rng = np.random.default_rng(0)
        mcts = make_planner("mcts", {"budget": 1000}, episode_cap=10).run_episode(
            env, env.start, env.default_goal, NOISE_FREE, rng
        )
        fast = delegate(env)

        assert fast.planning_time > 0
        assert mcts.planning_time >= 100 * fast.planning_time

    def test_mcts_reaches_steel_plate(self, steel):
        planner = MctsPlanner(MctsConfig(budget=5000))
        lengths = []
        for seed in range(10):
            result = planner.run_episode(
                steel, steel.start, steel.default_goal, NOISE_FREE, np.random.default_rng(seed)
            )
            if result.success:
                lengths.append(result.executed_actions)
        assert sum(n <= 15 for n in lengths) >= 8
