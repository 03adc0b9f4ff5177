"""Bundled environments, environment sources and summary statistics."""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from ..models import Environment, Goal, Proposition, UnknownEnvironmentError, make_action
from .env_format import load_env_file
from .generator_service import GeneratorSpec, gen_random_env

logger = logging.getLogger(__name__)

ENVIRONMENTS_DIR = Path(__file__).parent.parent / "environments"

CHAIN_PATTERN = re.compile(r"^chain-(\d+)$")

BUILTIN_NAMES = (
    "steel-plate",
    "chain-k",
    "diamond",
    "circular-bad",
    "two-providers",
    "mining",
    "mining-v2",
)


def chain_env(k: int) -> Environment:
    """Linear chain: action ``a{i}`` needs ``f{i-1}`` and sets ``f{i}``."""
    if k < 1:
        raise UnknownEnvironmentError(f"Chain length must be positive, got {k}")
    features = tuple(f"f{i}" for i in range(k))
    actions = tuple(
        make_action(
            features,
            f"a{i}",
            [(f"f{i - 1}", 1)] if i else [],
            [(f"f{i}", 1)],
            i,
        )
        for i in range(k)
    )
    return Environment(
        name=f"chain-{k}",
        features=features,
        actions=actions,
        episode_cap=max(20, 4 * k),
        default_goal=Goal((Proposition(k - 1, 1),)),
    )


def builtin_env(name: str) -> Environment:
    """Load a bundled environment by name (``chain-<k>`` for chains).

    Raises:
        UnknownEnvironmentError: If no such environment is bundled
    """
    match = CHAIN_PATTERN.match(name)
    if match:
        return chain_env(int(match.group(1)))
    path = ENVIRONMENTS_DIR / f"{name}.mip"
    if not path.is_file():
        raise UnknownEnvironmentError(
            f"Unknown builtin environment '{name}'. "
            f"Available: {', '.join(BUILTIN_NAMES)}"
        )
    return load_env_file(path)


def bundled_envs() -> List[Environment]:
    """Every file-backed builtin, in name order."""
    envs = [load_env_file(p) for p in ENVIRONMENTS_DIR.glob("*.mip")]
    return sorted(envs, key=lambda env: env.name)


def parse_generator_args(text: str) -> GeneratorSpec:
    """Parse ``key=value,...`` into a GeneratorSpec."""
    values: Dict[str, str] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise UnknownEnvironmentError(f"Expected key=value, got '{item}'")
        values[key.strip()] = value.strip()
    try:
        return GeneratorSpec.from_mapping(values)
    except ValueError as e:
        raise UnknownEnvironmentError(f"Invalid generator spec '{text}': {e}") from e


def resolve_env(source: str) -> Environment:
    """Resolve an environment source.

    Accepted forms: ``builtin:<name>``, ``random:<key=value,...>``, a path to
    an environment file, or a bare builtin name.

    Raises:
        UnknownEnvironmentError: If the source matches nothing
        EnvParseError: If the file does not parse
    """
    if source.startswith("builtin:"):
        return builtin_env(source[len("builtin:"):])
    if source.startswith("random:"):
        return gen_random_env(parse_generator_args(source[len("random:"):]))
    path = Path(source)
    if path.is_file():
        logger.debug(f"Loading environment file {path}")
        return load_env_file(path)
    try:
        return builtin_env(source)
    except UnknownEnvironmentError:
        raise UnknownEnvironmentError(
            f"'{source}' is neither a readable file nor a builtin environment"
        ) from None


@dataclass(frozen=True)
class EnvStats:
    """Size statistics of an environment."""

    name: str
    nodes: int
    actions: int
    edges_mean: float
    edges_std: float
    consuming: bool
    episode_cap: int
    state_space_size: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "nodes": self.nodes,
            "actions": self.actions,
            "edges_per_node": f"{self.edges_mean:.2f} ± {self.edges_std:.2f}",
            "consuming": self.consuming,
            "episode_cap": self.episode_cap,
            "state_space_size": self.state_space_size,
        }


def env_stats(env: Environment) -> EnvStats:
    """Nodes, actions, condition edges per action and state-space size."""
    degrees = np.array([len(a.condition) for a in env.actions], dtype=float)
    return EnvStats(
        name=env.name,
        nodes=env.m,
        actions=len(env.actions),
        edges_mean=float(degrees.mean()) if degrees.size else 0.0,
        edges_std=float(degrees.std()) if degrees.size else 0.0,
        consuming=env.is_consuming,
        episode_cap=env.episode_cap,
        state_space_size=env.state_space_size,
    )
