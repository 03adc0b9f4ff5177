"""Episode loop shared by the baseline planners.

Baselines decide one action index at a time from the current state code;
the loop executes it, applies noise and checks the goal.
"""

import logging
import time
from typing import Callable, List, Optional

import numpy as np

from ...models import ActionRef, Environment, EpisodeResult, Goal, NoiseSpec, Plan, State
from ..transition_model import TransitionModel

logger = logging.getLogger(__name__)

Decide = Callable[[int], Optional[int]]


def run_decision_loop(
    model: TransitionModel,
    s0: State,
    goal: Goal,
    noise: NoiseSpec,
    rng: np.random.Generator,
    decide: Decide,
    cap: int,
    label: str,
    training_time: float = 0.0,
) -> EpisodeResult:
    """Run until the goal holds, ``decide`` gives up, or ``cap`` steps pass.

    Only the time spent inside ``decide`` counts as planning time.
    """
    env: Environment = model.env
    mask, val = model.goal_masks(goal)
    code = model.encode(s0)
    if code & mask == val:
        return EpisodeResult(True, 0, Plan(), (s0,), 0.0, training_time=training_time)

    states = [s0]
    actions: List[int] = []
    step_times: List[float] = []
    failed = 0
    success = False
    reason: Optional[str] = "episode-cap"

    for t in range(1, cap + 1):
        tick = time.perf_counter()
        a = decide(code)
        step_times.append(time.perf_counter() - tick)
        if a is None:
            reason = "no-plan"
            break
        code, succeeded = model.step(code, a, noise, rng)
        if not succeeded:
            failed += 1
        actions.append(a)
        states.append(model.decode(code))
        if code & mask == val:
            success = True
            reason = None
            break

    executed = [env.actions[a] for a in actions]
    logger.info(
        f"{label} on {env.name}: success={success} actions={len(actions)} failed={failed}"
    )
    return EpisodeResult(
        success=success,
        executed_actions=len(actions),
        trace=Plan(tuple(ActionRef(a) for a in executed)),
        states=tuple(states),
        planning_time=sum(step_times),
        per_step_times=tuple(step_times),
        actions=tuple(a.name for a in executed),
        failed_actions=failed,
        failure_reason=reason,
        training_time=training_time,
    )
