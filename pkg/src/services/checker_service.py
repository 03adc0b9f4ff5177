"""Well-formedness and sufficiency checks, and the breadth-first optimality oracle."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set

import networkx as nx

from ..models import Environment, Goal, Proposition, State, StateSpaceTooLargeError
from .transition_model import TransitionModel

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 20
ORACLE_LIMIT = 24


@dataclass
class WellFormedReport:
    """Findings of :func:`check_well_formed`.

    ``ok`` holds exactly when no cycle and no unreachable goal candidate was
    found. Caveats describe checks that were skipped and never affect ``ok``.
    """

    cycles: List[List[str]] = field(default_factory=list)
    unreachable_goals: List[Proposition] = field(default_factory=list)
    caveats: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.cycles and not self.unreachable_goals


def provider_graph(env: Environment) -> nx.DiGraph:
    """Directed graph with an edge ``a -> b`` when ``b`` can satisfy part of ``a``'s condition.

    Negative guards on features that start at 0 create no edges.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(a.name for a in env.actions)
    for action in env.actions:
        for prop in action.condition:
            if prop.value == 0 and env.start[prop.feature] == 0:
                continue
            for provider in env.providers(prop):
                graph.add_edge(action.name, provider.name)
    return graph


def _breakable(env: Environment, members: Set[str]) -> bool:
    """Whether some member's condition can be met without going through the cycle."""
    for name in members:
        action = env.action_named(name)
        if all(
            prop.satisfied(env.start)
            or any(p.name not in members for p in env.providers(prop))
            for prop in action.condition
        ):
            return True
    return False


def find_cycles(env: Environment) -> List[List[str]]:
    """Unbreakable dependency cycles, members listed in declaration order."""
    graph = provider_graph(env)
    order = {a.name: a.index for a in env.actions}
    cycles = []
    for component in nx.strongly_connected_components(graph):
        if len(component) == 1:
            (node,) = component
            if not graph.has_edge(node, node):
                continue
        if not _breakable(env, component):
            cycles.append(sorted(component, key=order.__getitem__))
    cycles.sort(key=lambda c: order[c[0]])
    return cycles


def goal_candidates(env: Environment) -> List[Proposition]:
    """Every proposition some action sets to 1, ascending by feature."""
    return sorted({w for a in env.actions for w in a.effect if w.value == 1})


def _relaxed_reachable(env: Environment) -> Set[int]:
    """Features that can become 1; exact when the environment is monotone."""
    reached = {i for i, bit in enumerate(env.start) if bit}
    changed = True
    while changed:
        changed = False
        for action in env.actions:
            if all(p.feature in reached for p in action.condition):
                for w in action.effect:
                    if w.feature not in reached:
                        reached.add(w.feature)
                        changed = True
    return reached


def _exhaustive_reachable(env: Environment) -> Set[int]:
    model = TransitionModel(env)
    start = model.encode(env.start)
    seen = {start}
    frontier = deque([start])
    ones = 0
    while frontier:
        code = frontier.popleft()
        ones |= code
        for _, nxt in model.successors(code):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return {i for i in range(env.m) if (ones >> i) & 1}


def check_well_formed(env: Environment) -> WellFormedReport:
    """Report dependency cycles and goal candidates unreachable from the default start."""
    report = WellFormedReport(cycles=find_cycles(env))

    if env.is_monotone:
        reached: Optional[Set[int]] = _relaxed_reachable(env)
    elif env.m <= EXHAUSTIVE_LIMIT:
        reached = _exhaustive_reachable(env)
    else:
        reached = None
        report.caveats.append(
            f"Reachability not checked: {env.m} features exceed the exhaustive "
            f"limit of {EXHAUSTIVE_LIMIT} for non-monotone dynamics"
        )

    if reached is not None:
        report.unreachable_goals = [
            p for p in goal_candidates(env) if p.feature not in reached
        ]

    logger.debug(
        f"Checked {env.name}: {len(report.cycles)} cycles, "
        f"{len(report.unreachable_goals)} unreachable goals"
    )
    return report


def bfs_oracle(
    env: Environment, s0: State, goal: Goal, limit: int = ORACLE_LIMIT
) -> Optional[int]:
    """Minimum number of primitive actions from ``s0`` to a goal state, noise-free.

    Returns:
        Optimal length, or None when no goal state is reachable

    Raises:
        StateSpaceTooLargeError: If the environment has more than ``limit`` features
    """
    if env.m > limit:
        raise StateSpaceTooLargeError(
            f"{env.name} has {env.m} features; exhaustive search supports at most {limit}"
        )
    model = TransitionModel(env)
    mask, val = model.goal_masks(goal)
    start = model.encode(s0)
    if start & mask == val:
        return 0

    visited = bytearray(1 << env.m)
    visited[start] = 1
    frontier = deque([(start, 0)])
    while frontier:
        code, depth = frontier.popleft()
        for _, nxt in model.successors(code):
            if visited[nxt]:
                continue
            if nxt & mask == val:
                return depth + 1
            visited[nxt] = 1
            frontier.append((nxt, depth + 1))
    return None


def check_sufficient(
    env: Environment, starts: Sequence[State], goals: Sequence[Goal]
) -> bool:
    """True iff every goal is reachable from every start under noise-free dynamics.

    Raises:
        StateSpaceTooLargeError: If the environment has more than 20 features
    """
    if env.m > EXHAUSTIVE_LIMIT:
        raise StateSpaceTooLargeError(
            f"{env.name} has {env.m} features; exhaustive sufficiency checks "
            f"support at most {EXHAUSTIVE_LIMIT}, use sampled starts instead"
        )
    for s0 in starts:
        for goal in goals:
            if bfs_oracle(env, s0, goal, limit=EXHAUSTIVE_LIMIT) is None:
                logger.info(f"{env.name}: goal unreachable from {s0}")
                return False
    return True
