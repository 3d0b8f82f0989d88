# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from typing             import Callable, Optional, Union
from ..utils.constants  import (
    LOGGER_NAME,
    ROLLOUT_SAFETY_CAP,
    MC_CONTROL_CUTOFF,
    ACROBOT_CUTOFF,
    Task
)
from ..utils.exceptions import ConfigError, SimulationError
from .acrobot           import Acrobot
from .models            import EnvState, EpisodeConfig, EpisodeOutcome, TrajectoryStep
from .mountain_car      import MountainCar

logger = logging.getLogger(LOGGER_NAME)

Environment = Union[MountainCar, Acrobot]
Policy = Callable[[EnvState], int]

def make_env(task: Task, cutoff: Optional[int] = None) -> Environment:
    """
    Build the environment for a task

    Args:
        task: Experiment task
        cutoff: Episode cutoff; the task default is used when omitted

    Returns:
        MountainCar or Acrobot with its episode configuration
    """
    if task is Task.MC_PREDICTION:
        return MountainCar(EpisodeConfig(cutoff_steps=cutoff))
    if task is Task.MC_CONTROL:
        return MountainCar(EpisodeConfig(cutoff_steps=cutoff or MC_CONTROL_CUTOFF))
    if task is Task.ACROBOT_CONTROL:
        return Acrobot(EpisodeConfig(cutoff_steps=cutoff or ACROBOT_CUTOFF))
    raise ConfigError(f"Unknown task: {task}")

def run_episode(env: Environment,
                policy: Policy,
                cutoff: Optional[int],
                rng: np.random.Generator) -> EpisodeOutcome:
    """
    Reset the environment and follow a policy until termination or cutoff

    A cutoff ends the episode without marking the last transition terminal.
    Without a cutoff the rollout is bounded by the safety cap.

    Raises:
        ConfigError: If cutoff is given and smaller than 1
        SimulationError: If an uncut episode exceeds the safety cap
    """
    if cutoff is not None and cutoff < 1:
        raise ConfigError(f"Cutoff must be at least 1, got {cutoff}")

    outcome = EpisodeOutcome()
    state = env.reset(rng)
    limit = cutoff if cutoff is not None else ROLLOUT_SAFETY_CAP

    while outcome.steps < limit:
        action = policy(state)
        result = env.step(action)
        outcome.trajectory.append(TrajectoryStep(state=state, action=action, result=result))
        if result.terminal:
            outcome.terminated_naturally = True
            return outcome
        state = result.next_state

    if cutoff is None:
        error_msg = f"Episode did not terminate within {ROLLOUT_SAFETY_CAP} steps"
        logger.error(error_msg)
        raise SimulationError(error_msg)
    return outcome

def rollout_return(env: Environment, policy: Policy, state: EnvState) -> float:
    """
    Undiscounted return of following a deterministic policy from a state

    Raises:
        SimulationError: If the rollout exceeds the safety cap
    """
    env.set_state(state)
    total = 0.0
    for _ in range(ROLLOUT_SAFETY_CAP):
        result = env.step(policy(env.state))
        total += result.reward
        if result.terminal:
            return total

    error_msg = f"Rollout from {state} did not terminate within {ROLLOUT_SAFETY_CAP} steps"
    logger.error(error_msg)
    raise SimulationError(error_msg)
