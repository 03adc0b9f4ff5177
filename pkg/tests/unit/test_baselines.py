"""Tests for the MCTS, RRT and Q-learning baselines."""

import numpy as np
import pytest

from src.models import (
    Environment,
    InapplicablePlannerError,
    MemoryBudgetExceededError,
    NoiseSpec,
    State,
)
from src.services.baselines import (
    MctsConfig,
    MctsPlanner,
    MctsSearch,
    QLearnConfig,
    QLearnPlanner,
    QTable,
    RrtConfig,
    RrtPlanner,
    check_applicable,
    grow_tree,
    mcts_decide,
    qlearn_act,
    qlearn_train,
    rrt_plan,
)
from src.services.checker_service import bfs_oracle
from src.services.env_catalog import builtin_env, chain_env
from src.services.env_format import parse_env
from src.services.transition_model import TransitionModel


def zeros(env):
    return State.zeros(env.m)


class TestMcts:
    """Test suite for MCTS."""

    def test_first_action_lies_on_an_optimal_plan(self, steel):
        action = mcts_decide(
            TransitionModel(steel),
            zeros(steel),
            steel.default_goal,
            MctsConfig(budget=5000),
            np.random.default_rng(0),
        )
        assert action.name in {"getStone", "getIronOre"}

    def test_root_visits_sum_to_budget(self, steel):
        model = TransitionModel(steel)
        search = MctsSearch(model, steel.default_goal, MctsConfig(budget=300), np.random.default_rng(1), 50)
        search.run(0)
        assert search.root_visits().sum() == 300
        for child in search.root.children.values():
            assert 0.0 <= child.mean <= 1.0

    def test_budget_of_one(self, steel):
        model = TransitionModel(steel)
        search = MctsSearch(model, steel.default_goal, MctsConfig(budget=1), np.random.default_rng(2), 50)
        a = search.run(0)
        assert list(search.root.children) == [a]

    def test_solves_chain(self):
        env = chain_env(4)
        result = MctsPlanner(MctsConfig(budget=300)).run_episode(
            env, zeros(env), env.default_goal, NoiseSpec(), np.random.default_rng(0)
        )
        assert result.success
        assert result.executed_actions >= 4
        assert len(result.per_step_times) == result.executed_actions

    def test_config_validation(self):
        with pytest.raises(ValueError):
            MctsConfig(budget=0)


class TestRrt:
    """Test suite for RRT."""

    def test_chain_path(self):
        env = chain_env(3)
        plan = rrt_plan(env, zeros(env), env.default_goal, RrtConfig(max_nodes=1000), np.random.default_rng(0))
        assert [a.name for a in plan.flatten()] == ["a0", "a1", "a2"]

    def test_consuming_environment_refused(self, steel):
        with pytest.raises(InapplicablePlannerError):
            rrt_plan(steel, zeros(steel), steel.default_goal, RrtConfig(), np.random.default_rng(0))

    def test_shared_provider_refused(self):
        with pytest.raises(InapplicablePlannerError, match="hasStone"):
            check_applicable(builtin_env("two-providers"))

    def test_single_node_tree(self):
        env = chain_env(3)
        rng = np.random.default_rng(0)
        assert rrt_plan(env, zeros(env), env.default_goal, RrtConfig(max_nodes=1), rng) is None
        done = State.from_string("001")
        assert rrt_plan(env, done, env.default_goal, RrtConfig(max_nodes=1), rng).is_empty

    def test_failed_search_fills_node_budget(self):
        free = "\n".join(f"action get{i} needs - gives f{i}=1" for i in range(8))
        features = "\n".join(f"feature f{i}" for i in range(8))
        env = parse_env(
            f"mipenv 1\nname locked\n{features}\nfeature locked\n{free}\ngoal locked=1\n"
        )
        model = TransitionModel(env)
        for seed in range(5):
            tree = grow_tree(
                model, 0, env.default_goal, RrtConfig(max_nodes=60), np.random.default_rng(seed)
            )
            assert tree.path() is None
            assert len(tree) == 60
            assert len(set(tree.nodes)) == 60

    def test_path_replays(self):
        env = builtin_env("diamond")
        plan = rrt_plan(env, env.start, env.default_goal, RrtConfig(max_nodes=500), np.random.default_rng(3))
        assert plan is not None
        state = env.start
        for action in plan.flatten():
            assert action.succeeds(state)
            state = action.effect.apply(state)
        assert env.default_goal.achieved(state)

    def test_planner_solves_diamond(self):
        env = builtin_env("diamond")
        result = RrtPlanner(RrtConfig(max_nodes=500)).run_episode(
            env, zeros(env), env.default_goal, NoiseSpec(), np.random.default_rng(0)
        )
        assert result.success
        assert result.executed_actions == 4


class TestQLearning:
    """Test suite for Q-learning."""

    def test_untrained_table_picks_first_action(self, steel):
        table = qlearn_train(steel, steel.default_goal, QLearnConfig(training_episodes=0), NoiseSpec(), np.random.default_rng(0))
        assert table.pairs == 0
        assert qlearn_act(table, zeros(steel)).name == "getStone"

    @pytest.mark.slow
    def test_converges_on_steel_plate(self, steel):
        table = qlearn_train(
            steel,
            steel.default_goal,
            QLearnConfig(training_episodes=3000),
            NoiseSpec(),
            np.random.default_rng(0),
        )
        assert qlearn_act(table, zeros(steel)).name in {"getStone", "getIronOre"}
        assert qlearn_act(table, State.from_string("01010")).name == "makeSteelPlate"

        result = QLearnPlanner(QLearnConfig(training_episodes=3000)).run_episode(
            steel, zeros(steel), steel.default_goal, NoiseSpec(), np.random.default_rng(0)
        )
        assert result.success
        assert result.executed_actions == 5
        assert result.training_time > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("k", range(1, 9))
    def test_greedy_policy_is_optimal_on_chains(self, k):
        env = chain_env(k)
        result = QLearnPlanner(QLearnConfig(training_episodes=3000)).run_episode(
            env, zeros(env), env.default_goal, NoiseSpec(), np.random.default_rng(k)
        )
        assert result.success
        assert result.executed_actions == bfs_oracle(env, zeros(env), env.default_goal) == k

    def test_memory_budget(self):
        env = chain_env(12)
        with pytest.raises(MemoryBudgetExceededError):
            qlearn_train(
                env,
                env.default_goal,
                QLearnConfig(training_episodes=2000, max_pairs=1000),
                NoiseSpec(0.5),
                np.random.default_rng(0),
            )

    def test_table_budget_counts_pairs(self, steel):
        table = QTable(TransitionModel(steel), max_pairs=10)
        table.ensure(0)
        table.ensure(1)
        assert table.pairs == 10
        with pytest.raises(MemoryBudgetExceededError):
            table.ensure(2)

    def test_no_actions(self):
        env = Environment("inert", ("f",), ())
        goal = env.goal_from([("f", 1)])
        result = QLearnPlanner(QLearnConfig(training_episodes=5)).run_episode(
            env, zeros(env), goal, NoiseSpec(), np.random.default_rng(0)
        )
        assert not result.success
