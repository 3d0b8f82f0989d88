# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import math
import numpy as np
from typing            import Optional, Tuple
from ..utils.constants import (
    ACROBOT_DT,
    ACROBOT_LINK_LENGTH_1,
    ACROBOT_LINK_MASS_1,
    ACROBOT_LINK_MASS_2,
    ACROBOT_LINK_COM_POS_1,
    ACROBOT_LINK_COM_POS_2,
    ACROBOT_LINK_MOI,
    ACROBOT_GRAVITY,
    ACROBOT_MAX_VEL_1,
    ACROBOT_MAX_VEL_2,
    ACROBOT_TORQUES,
    ACROBOT_RESET_RANGE,
    NUM_ACTIONS
)
from .models           import AcrobotState, EpisodeConfig, StepResult

def _dsdt(s: np.ndarray, torque: float) -> np.ndarray:
    """Equations of motion of the two-link arm (book version)"""
    m1, m2 = ACROBOT_LINK_MASS_1, ACROBOT_LINK_MASS_2
    l1 = ACROBOT_LINK_LENGTH_1
    lc1, lc2 = ACROBOT_LINK_COM_POS_1, ACROBOT_LINK_COM_POS_2
    i1 = i2 = ACROBOT_LINK_MOI
    g = ACROBOT_GRAVITY
    theta1, theta2, dtheta1, dtheta2 = s

    d1 = m1 * lc1 ** 2 + m2 * (l1 ** 2 + lc2 ** 2 + 2 * l1 * lc2 * math.cos(theta2)) + i1 + i2
    d2 = m2 * (lc2 ** 2 + l1 * lc2 * math.cos(theta2)) + i2
    phi2 = m2 * lc2 * g * math.cos(theta1 + theta2 - math.pi / 2.0)
    phi1 = (
        -m2 * l1 * lc2 * dtheta2 ** 2 * math.sin(theta2)
        - 2 * m2 * l1 * lc2 * dtheta2 * dtheta1 * math.sin(theta2)
        + (m1 * lc1 + m2 * l1) * g * math.cos(theta1 - math.pi / 2.0)
        + phi2
    )
    ddtheta2 = (
        torque + d2 / d1 * phi1 - m2 * l1 * lc2 * dtheta1 ** 2 * math.sin(theta2) - phi2
    ) / (m2 * lc2 ** 2 + i2 - d2 ** 2 / d1)
    ddtheta1 = -(d2 * ddtheta2 + phi1) / d1
    return np.array([dtheta1, dtheta2, ddtheta1, ddtheta2], dtype=np.float64)

def _rk4(s: np.ndarray, torque: float, dt: float) -> np.ndarray:
    """One fourth-order Runge-Kutta step with the torque held constant"""
    k1 = _dsdt(s, torque)
    k2 = _dsdt(s + dt / 2.0 * k1, torque)
    k3 = _dsdt(s + dt / 2.0 * k2, torque)
    k4 = _dsdt(s + dt * k3, torque)
    return s + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)

def wrap_angle(x: float) -> float:
    """Wrap x into [-pi, pi]"""
    diff = 2 * math.pi
    while x > math.pi:
        x -= diff
    while x < -math.pi:
        x += diff
    return x

def acrobot_terminal(theta1: float, theta2: float) -> bool:
    """Tip of the second link is more than one link length above the pivot"""
    return -math.cos(theta1) - math.cos(theta1 + theta2) > 1.0

def acrobot_reset(rng: np.random.Generator) -> AcrobotState:
    """Start hanging down, each component uniform in [-0.1, 0.1]"""
    s = rng.uniform(-ACROBOT_RESET_RANGE, ACROBOT_RESET_RANGE, size=4)
    return AcrobotState(*(float(v) for v in s))

def acrobot_step(s: AcrobotState, action: int) -> StepResult:
    """
    Apply torque ACROBOT_TORQUES[action] for one 0.2 time unit

    Args:
        s: Current state
        action: 0 (-1 torque), 1 (no torque) or 2 (+1 torque)

    Returns:
        StepResult with reward -1, or 0 on the transition reaching the bar
    """
    ns = _rk4(s.as_array(), ACROBOT_TORQUES[action], ACROBOT_DT)
    theta1 = wrap_angle(float(ns[0]))
    theta2 = wrap_angle(float(ns[1]))
    omega1 = min(max(float(ns[2]), -ACROBOT_MAX_VEL_1), ACROBOT_MAX_VEL_1)
    omega2 = min(max(float(ns[3]), -ACROBOT_MAX_VEL_2), ACROBOT_MAX_VEL_2)

    terminal = acrobot_terminal(theta1, theta2)
    return StepResult(
        next_state=AcrobotState(theta1, theta2, omega1, omega2),
        reward=0.0 if terminal else -1.0,
        terminal=terminal
    )

class Acrobot:
    """Acrobot episode state machine exposing the 4-dimensional internal state"""

    num_actions = NUM_ACTIONS
    lower_bounds: Tuple[float, ...] = (-math.pi, -math.pi, -ACROBOT_MAX_VEL_1, -ACROBOT_MAX_VEL_2)
    upper_bounds: Tuple[float, ...] = (math.pi, math.pi, ACROBOT_MAX_VEL_1, ACROBOT_MAX_VEL_2)

    def __init__(self, episode: Optional[EpisodeConfig] = None):
        self.episode = episode or EpisodeConfig()
        self.state: Optional[AcrobotState] = None

    def reset(self, rng: np.random.Generator) -> AcrobotState:
        self.state = acrobot_reset(rng)
        return self.state

    def step(self, action: int) -> StepResult:
        result = acrobot_step(self.state, action)
        self.state = result.next_state
        return result

    def set_state(self, state: AcrobotState) -> None:
        self.state = state

    @staticmethod
    def make_state(values: np.ndarray) -> AcrobotState:
        return AcrobotState(*(float(v) for v in values[:4]))
