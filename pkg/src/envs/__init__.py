from .models       import (
    MountainCarState,
    AcrobotState,
    EnvState,
    StepResult,
    EpisodeConfig,
    EpisodeOutcome,
    TrajectoryStep
)
from .mountain_car import (
    MountainCar,
    mountain_car_reset,
    mountain_car_step,
    energy_pumping_action,
    BACK,
    NONE,
    FORWARD
)
from .acrobot      import Acrobot, acrobot_reset, acrobot_step, acrobot_terminal
from .episode      import Environment, Policy, make_env, run_episode, rollout_return

__all__ = [
    'MountainCarState',
    'AcrobotState',
    'EnvState',
    'StepResult',
    'EpisodeConfig',
    'EpisodeOutcome',
    'TrajectoryStep',
    'MountainCar',
    'mountain_car_reset',
    'mountain_car_step',
    'energy_pumping_action',
    'BACK',
    'NONE',
    'FORWARD',
    'Acrobot',
    'acrobot_reset',
    'acrobot_step',
    'acrobot_terminal',
    'Environment',
    'Policy',
    'make_env',
    'run_episode',
    'rollout_return'
]
