"""Seeded random dependency-graph environments."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import networkx as nx
import numpy as np

from ..models import Environment, Goal, Proposition, make_action

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of a random acyclic dependency graph.

    Attributes:
        n_nodes: Number of nodes; each becomes one feature and one action
        edge_mean: Mean of the per-node in-degree law
        edge_std: Standard deviation of the in-degree law
        edge_max: Upper truncation of the in-degree
        consuming_fraction: Probability that a parent edge consumes the parent
        seed: Generator seed
        episode_cap: Episode cap written into the environment
    """

    n_nodes: int = 20
    edge_mean: float = 1.32
    edge_std: float = 0.71
    edge_max: int = 4
    consuming_fraction: float = 0.0
    seed: int = 0
    episode_cap: int = 100

    def __post_init__(self) -> None:
        if self.n_nodes < 1:
            raise ValueError(f"n_nodes must be at least 1, got {self.n_nodes}")
        if self.edge_mean < 0 or self.edge_std < 0 or self.edge_max < 0:
            raise ValueError("In-degree law parameters must be non-negative")
        if not 0.0 <= self.consuming_fraction <= 1.0:
            raise ValueError(
                f"consuming_fraction must lie in [0, 1], got {self.consuming_fraction}"
            )

    @classmethod
    def from_mapping(cls, values: Dict[str, Any]) -> "GeneratorSpec":
        """Build from loosely typed key/value pairs (CLI and ``random:`` sources).

        ``nodes``, ``mean``, ``std``, ``max`` and ``consuming`` are accepted as
        short aliases.
        """
        aliases = {
            "nodes": "n_nodes",
            "mean": "edge_mean",
            "std": "edge_std",
            "max": "edge_max",
            "consuming": "consuming_fraction",
            "episodes": "episode_cap",
        }
        kinds = {
            "n_nodes": int,
            "edge_mean": float,
            "edge_std": float,
            "edge_max": int,
            "consuming_fraction": float,
            "seed": int,
            "episode_cap": int,
        }
        kwargs: Dict[str, Any] = {}
        for key, value in values.items():
            field_name = aliases.get(key, key)
            if field_name not in kinds:
                raise ValueError(f"Unknown generator parameter: {key}")
            kwargs[field_name] = kinds[field_name](value)
        return cls(**kwargs)


def feature_name(i: int) -> str:
    return f"has_n{i}"


def action_name(i: int) -> str:
    return f"make_n{i}"


def sample_parents(spec: GeneratorSpec) -> List[List[Tuple[int, bool]]]:
    """Draw (parent, consuming) pairs for every node; parents precede the node."""
    rng = np.random.default_rng(spec.seed)
    parents: List[List[Tuple[int, bool]]] = []
    for i in range(spec.n_nodes):
        k = int(np.clip(np.rint(rng.normal(spec.edge_mean, spec.edge_std)), 0, min(i, spec.edge_max)))
        if k == 0:
            parents.append([])
            continue
        chosen = sorted(int(p) for p in rng.choice(i, size=k, replace=False))
        consuming = rng.random(k) < spec.consuming_fraction
        parents.append([(p, bool(c)) for p, c in zip(chosen, consuming)])
    return parents


def default_goal_node(parents: List[List[Tuple[int, bool]]]) -> int:
    """Leaf with the largest prerequisite closure; ties go to the highest index."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(parents)))
    graph.add_edges_from((p, i) for i, ps in enumerate(parents) for p, _ in ps)
    leaves = [n for n in graph.nodes if graph.out_degree(n) == 0]
    return max(leaves, key=lambda n: (len(nx.ancestors(graph, n)), n))


def gen_random_env(spec: GeneratorSpec) -> Environment:
    """Generate an acyclic environment with one feature and one action per node.

    The action of node ``i`` needs every parent feature and sets feature
    ``i``; consuming edges also clear the parent feature.
    """
    parents = sample_parents(spec)
    features = tuple(feature_name(i) for i in range(spec.n_nodes))
    actions = []
    for i, ps in enumerate(parents):
        needs = [(feature_name(p), 1) for p, _ in ps]
        gives = [(feature_name(i), 1)] + [(feature_name(p), 0) for p, c in ps if c]
        actions.append(make_action(features, action_name(i), needs, gives, i))

    goal = Goal((Proposition(default_goal_node(parents), 1),))
    env = Environment(
        name=f"random-n{spec.n_nodes}-s{spec.seed}",
        features=features,
        actions=tuple(actions),
        episode_cap=spec.episode_cap,
        default_goal=goal,
    )
    edges = sum(len(ps) for ps in parents)
    logger.debug(
        f"Generated {env.name}: {edges} edges, goal {env.features[goal.props[0].feature]}"
    )
    return env
