# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from dataclasses        import dataclass
from typing             import List, Optional, Tuple
from ..agents           import Learner, LearnerConfig
from ..envs             import Environment, Policy, energy_pumping_action, make_env
from ..evaluation       import (
    EvalDataset,
    InterferenceSnapshot,
    default_prediction_dataset,
    interference_schedule,
    rve,
    take_snapshot
)
from ..features         import BoundsSpec, Featurizer, TileCoderConfig, make_featurizer
from ..network          import Network, init_network
from ..optim            import Adam, AdamState, Optimizer, Sgd, SgdConfig
from ..stats            import RunRecord
from ..utils.constants  import LOGGER_NAME, ROLLOUT_SAFETY_CAP
from ..utils.exceptions import DivergenceError, SimulationError
from .models            import ExperimentConfig, Setting

logger = logging.getLogger(LOGGER_NAME)

@dataclass
class RunComponents:
    """Everything one seeded run owns"""
    env: Environment
    featurizer: Featurizer
    net: Network
    learner: Learner
    env_rng: np.random.Generator
    policy: Optional[Policy]

def run_streams(seed: int) -> Tuple[np.random.Generator, np.random.Generator, np.random.Generator]:
    """Independent environment, initialization and agent streams of a run seed"""
    env_seq, init_seq, agent_seq = np.random.SeedSequence(seed).spawn(3)
    return (np.random.default_rng(env_seq),
            np.random.default_rng(init_seq),
            np.random.default_rng(agent_seq))

def build_optimizer(cfg: ExperimentConfig, setting: Setting, size: int) -> Optimizer:
    if cfg.system.uses_adam:
        return Adam(AdamState(alpha=setting.step_size, size=size, beta1=setting.beta1,
                              beta2=setting.beta2, epsilon=cfg.adam_epsilon))
    return Sgd(SgdConfig(alpha=setting.step_size))

def build_featurizer(cfg: ExperimentConfig, env: Environment) -> Featurizer:
    bounds = BoundsSpec(lower=tuple(env.lower_bounds), upper=tuple(env.upper_bounds))
    tile_cfg = TileCoderConfig(dims=cfg.dims, capacity=cfg.tile_capacity,
                               num_tilings=cfg.num_tilings, tiles_per_dim=cfg.tiles_per_dim)
    return make_featurizer(cfg.preprocessing, bounds, cfg.bins, tile_cfg)

def build_components(cfg: ExperimentConfig, setting: Setting, seed: int) -> RunComponents:
    """
    Construct env, featurizer, network, optimizer and learner for one run

    The network is initialized from the run's init stream; the learner
    explores and samples replay batches from the agent stream.
    """
    env_rng, init_rng, agent_rng = run_streams(seed)
    env = make_env(cfg.task, cfg.cutoff)
    featurizer = build_featurizer(cfg, env)
    net = init_network(cfg.network, init_rng)
    learner_cfg = LearnerConfig.for_variant(
        cfg.system,
        control=not cfg.task.is_prediction,
        gamma=cfg.gamma,
        epsilon=cfg.epsilon,
        batch_size=cfg.batch_size,
        buffer_capacity=cfg.buffer_capacity,
        target_sync_period=setting.target_sync_period
    )
    learner = Learner(net, build_optimizer(cfg, setting, net.spec.parameter_count),
                      featurizer, learner_cfg, agent_rng)
    policy = energy_pumping_action if cfg.task.is_prediction else None
    return RunComponents(env=env, featurizer=featurizer, net=net, learner=learner,
                         env_rng=env_rng, policy=policy)

def run_learning_episode(learner: Learner,
                         env: Environment,
                         rng: np.random.Generator,
                         policy: Optional[Policy] = None) -> int:
    """
    One learning episode from a fresh reset, cut off at env.episode.cutoff_steps

    Follows the fixed policy when one is given (prediction), otherwise acts
    epsilon-greedily (control).

    Returns:
        Number of environment steps taken

    Raises:
        DivergenceError: If a value or TD error becomes non-finite
        SimulationError: If an uncut episode exceeds the safety cap
    """
    cutoff = env.episode.cutoff_steps
    learner.begin_episode(env.reset(rng), policy)
    limit = cutoff if cutoff is not None else ROLLOUT_SAFETY_CAP
    steps = 0
    while steps < limit:
        if policy is None:
            result = learner.step_control(env)
        else:
            result = learner.step_prediction(env, policy)
        steps += 1
        if result.terminal:
            return steps

    if cutoff is None:
        error_msg = f"Learning episode did not terminate within {ROLLOUT_SAFETY_CAP} steps"
        logger.error(error_msg)
        raise SimulationError(error_msg)
    return steps

def _check_finite(net: Network) -> None:
    if not net.is_finite():
        raise DivergenceError("Network parameters became non-finite")

def run_single(cfg: ExperimentConfig,
               setting: Setting,
               seed: int,
               dataset: Optional[EvalDataset] = None,
               run_index: int = 0) -> RunRecord:
    """
    Execute cfg.episodes learning episodes of one seeded run

    Control runs record steps per episode. Prediction runs record the RVE
    at the end of each episode, capped at rve_ceiling_multiplier times the
    RVE of the freshly initialized network, and take interference
    snapshots on the schedule when enabled. A diverged run is flagged and
    its remaining episodes are saturated at the cutoff or the RVE ceiling.

    Args:
        cfg: Experiment configuration
        setting: Step-size and optimizer parameters
        seed: Run seed (base_seed + run index in sweeps)
        dataset: Evaluation states for prediction; built from cfg when omitted
        run_index: Position of the run within its setting
    """
    parts = build_components(cfg, setting, seed)
    prediction = cfg.task.is_prediction
    if prediction and dataset is None:
        dataset = default_prediction_dataset(cfg.dataset_steps, cfg.dataset_size, cfg.dataset_seed)

    per_episode = np.empty(cfg.episodes, dtype=np.float64)
    snapshots: List[InterferenceSnapshot] = []
    schedule = set(interference_schedule(cfg.episodes)) if cfg.measure_interference else set()
    ceiling = float(parts.env.episode.cutoff_steps or 0)
    if prediction:
        ceiling = cfg.rve_ceiling_multiplier * rve(parts.net, parts.featurizer, dataset)
    if 0 in schedule:
        snapshots.append(take_snapshot(parts.net, parts.featurizer, dataset, 0))

    diverged = False
    with np.errstate(over='ignore', invalid='ignore'):
        for episode in range(cfg.episodes):
            try:
                steps = run_learning_episode(parts.learner, parts.env, parts.env_rng, parts.policy)
                _check_finite(parts.net)
                if prediction:
                    error = rve(parts.net, parts.featurizer, dataset)
                    if not np.isfinite(error):
                        raise DivergenceError(f"Value error became non-finite ({error})")
                    per_episode[episode] = min(error, ceiling)
                else:
                    per_episode[episode] = steps
            except DivergenceError as e:
                logger.warning(f"{cfg.label} [{setting.label}] seed {seed} diverged in episode "
                               f"{episode + 1}: {str(e)}")
                per_episode[episode:] = ceiling
                diverged = True
                break

            logger.debug(f"seed {seed} episode {episode + 1}: {per_episode[episode]:g}")
            if episode + 1 in schedule:
                snapshots.append(take_snapshot(parts.net, parts.featurizer, dataset, episode + 1))

    logger.info(f"{cfg.label} [{setting.label}] seed {seed}: mean {per_episode.mean():g}"
                f"{' (diverged)' if diverged else ''}")
    return RunRecord(run_seed=seed, per_episode=per_episode, run_index=run_index,
                     snapshots=snapshots, diverged=diverged)

def train_network(cfg: ExperimentConfig,
                  setting: Setting,
                  seed: int,
                  episodes: int) -> Tuple[Network, Featurizer]:
    """
    Train one network for a number of episodes and hand it back with its featurizer

    Raises:
        DivergenceError: If training diverges
    """
    parts = build_components(cfg, setting, seed)
    with np.errstate(over='ignore', invalid='ignore'):
        for _ in range(episodes):
            run_learning_episode(parts.learner, parts.env, parts.env_rng, parts.policy)
            _check_finite(parts.net)
    logger.info(f"Trained {cfg.label} [{setting.label}] for {episodes} episodes ({parts.learner.steps} steps)")
    return parts.net, parts.featurizer
