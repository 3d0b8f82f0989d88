# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import csv
import logging
import numpy as np
from pathlib            import Path
from ..envs             import (
    EnvState,
    Environment,
    MountainCar,
    Policy,
    energy_pumping_action,
    rollout_return
)
from ..utils.constants  import LOGGER_NAME, ROLLOUT_SAFETY_CAP
from ..utils.exceptions import EvaluationError, SimulationError
from .models            import EvalDataset

logger = logging.getLogger(LOGGER_NAME)

MC_DATASET_COLUMNS = ('position', 'velocity', 'true_value')

def true_value(env: Environment, policy: Policy, s: EnvState) -> float:
    """Undiscounted return of one rollout of a deterministic policy from s"""
    return rollout_return(env, policy, s)

def build_eval_dataset(env: Environment,
                       policy: Policy,
                       total_steps: int,
                       sample_size: int,
                       rng: np.random.Generator) -> EvalDataset:
    """
    Sample states from a long on-policy walk and roll out their true values

    The walk restarts the episode on termination and records the state
    before every step, so the sample approximates the on-policy state
    distribution.

    Raises:
        EvaluationError: If sample_size exceeds total_steps or either is not positive
        SimulationError: If an episode of the walk exceeds the safety cap
    """
    if total_steps < 1 or sample_size < 1:
        raise EvaluationError(f"Need positive walk length and sample size, got {total_steps} and {sample_size}")
    if sample_size > total_steps:
        raise EvaluationError(f"Cannot sample {sample_size} states from a {total_steps}-step walk")

    logger.info(f"Walking {total_steps} steps to sample {sample_size} evaluation states")
    state = env.reset(rng)
    visited = np.empty((total_steps, state.as_array().shape[0]), dtype=np.float64)
    episode_steps = 0
    for i in range(total_steps):
        visited[i] = state.as_array()
        result = env.step(policy(state))
        episode_steps += 1
        if result.terminal:
            state = env.reset(rng)
            episode_steps = 0
        elif episode_steps >= ROLLOUT_SAFETY_CAP:
            error_msg = f"Walk episode exceeded {ROLLOUT_SAFETY_CAP} steps; the policy does not terminate"
            logger.error(error_msg)
            raise SimulationError(error_msg)
        else:
            state = result.next_state

    chosen = visited[rng.choice(total_steps, size=sample_size, replace=False)]
    values = np.array([true_value(env, policy, env.make_state(row)) for row in chosen])
    logger.info(f"Built evaluation dataset: {sample_size} states, mean true value {values.mean():.2f}")
    return EvalDataset(states=chosen, true_values=values)

def save_dataset(dataset: EvalDataset, path: Path) -> None:
    """Write a Mountain Car dataset as position, velocity, true_value rows"""
    if dataset.states.shape[1] != 2:
        raise EvaluationError("Only Mountain Car datasets have a CSV form")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(MC_DATASET_COLUMNS)
            for (position, velocity), value in zip(dataset.states, dataset.true_values):
                writer.writerow([repr(float(position)), repr(float(velocity)), repr(float(value))])
    except OSError as e:
        error_msg = f"Failed to write dataset {path}: {str(e)}"
        logger.error(error_msg)
        raise EvaluationError(error_msg)
    logger.info(f"Wrote evaluation dataset to {path}")

def load_dataset(path: Path) -> EvalDataset:
    """Read a dataset written by save_dataset"""
    try:
        with open(path, 'r', newline='') as f:
            reader = csv.DictReader(f)
            rows = [(float(r['position']), float(r['velocity']), float(r['true_value'])) for r in reader]
    except (OSError, KeyError, ValueError) as e:
        error_msg = f"Failed to read dataset {path}: {str(e)}"
        logger.error(error_msg)
        raise EvaluationError(error_msg)

    if not rows:
        raise EvaluationError(f"Dataset {path} is empty")
    table = np.array(rows)
    logger.info(f"Loaded {len(rows)} evaluation states from {path}")
    return EvalDataset(states=table[:, :2], true_values=table[:, 2])

def default_prediction_dataset(total_steps: int, sample_size: int, seed: int) -> EvalDataset:
    """Mountain Car energy-pumping dataset from a dedicated seed"""
    return build_eval_dataset(MountainCar(), energy_pumping_action, total_steps, sample_size,
                              np.random.default_rng(seed))
