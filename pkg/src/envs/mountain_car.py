# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import math
import numpy as np
from typing            import Optional, Tuple
from ..utils.constants import (
    MC_POSITION_MIN,
    MC_POSITION_MAX,
    MC_VELOCITY_MIN,
    MC_VELOCITY_MAX,
    MC_GOAL_POSITION,
    MC_FORCE,
    MC_GRAVITY,
    MC_RESET_LOW,
    MC_RESET_HIGH,
    NUM_ACTIONS
)
from .models           import EpisodeConfig, MountainCarState, StepResult

BACK, NONE, FORWARD = 0, 1, 2

def mountain_car_reset(rng: np.random.Generator) -> MountainCarState:
    """Start at rest somewhere near the bottom of the valley"""
    return MountainCarState(position=float(rng.uniform(MC_RESET_LOW, MC_RESET_HIGH)), velocity=0.0)

def mountain_car_step(s: MountainCarState, action: int) -> StepResult:
    """
    Advance the car by one step

    Args:
        s: Current state
        action: 0 (back), 1 (none) or 2 (forward)

    Returns:
        StepResult with reward -1, or 0 on the transition reaching the goal
    """
    throttle = action - 1
    velocity = s.velocity + MC_FORCE * throttle - MC_GRAVITY * math.cos(3 * s.position)
    velocity = min(max(velocity, MC_VELOCITY_MIN), MC_VELOCITY_MAX)
    position = min(max(s.position + velocity, MC_POSITION_MIN), MC_POSITION_MAX)

    # Inelastic left wall
    if position == MC_POSITION_MIN:
        velocity = 0.0

    terminal = position >= MC_GOAL_POSITION
    return StepResult(
        next_state=MountainCarState(position=position, velocity=velocity),
        reward=0.0 if terminal else -1.0,
        terminal=terminal
    )

def energy_pumping_action(s: MountainCarState) -> int:
    """Throttle in the direction of the current velocity"""
    return BACK if s.velocity < 0 else FORWARD

class MountainCar:
    """Mountain Car episode state machine"""

    num_actions = NUM_ACTIONS
    lower_bounds: Tuple[float, ...] = (MC_POSITION_MIN, MC_VELOCITY_MIN)
    upper_bounds: Tuple[float, ...] = (MC_POSITION_MAX, MC_VELOCITY_MAX)

    def __init__(self, episode: Optional[EpisodeConfig] = None):
        self.episode = episode or EpisodeConfig()
        self.state: Optional[MountainCarState] = None

    def reset(self, rng: np.random.Generator) -> MountainCarState:
        self.state = mountain_car_reset(rng)
        return self.state

    def step(self, action: int) -> StepResult:
        result = mountain_car_step(self.state, action)
        self.state = result.next_state
        return result

    def set_state(self, state: MountainCarState) -> None:
        self.state = state

    @staticmethod
    def make_state(values: np.ndarray) -> MountainCarState:
        return MountainCarState(float(values[0]), float(values[1]))
