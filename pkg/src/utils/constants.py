# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import math
from enum import Enum

LOGGER_NAME = 'InterferenceLab'

class Task(Enum):
    """Experiment tasks"""
    MC_PREDICTION = 'mc_prediction'
    MC_CONTROL = 'mc_control'
    ACROBOT_CONTROL = 'acrobot_control'

    @property
    def is_prediction(self) -> bool:
        return self is Task.MC_PREDICTION

    @property
    def is_mountain_car(self) -> bool:
        return self is not Task.ACROBOT_CONTROL

class Preprocessing(Enum):
    """Input preprocessing strategies"""
    RAW = 'raw'
    DISCRETIZE = 'discretize'
    TILECODE = 'tilecode'

class System(Enum):
    """The five learning systems"""
    SGD = 'sgd'
    SGD_ER = 'sgd_er'
    ADAM = 'adam'
    ADAM_ER = 'adam_er'
    ADAM_ER_TN = 'adam_er_tn'

    @property
    def uses_adam(self) -> bool:
        return self in (System.ADAM, System.ADAM_ER, System.ADAM_ER_TN)

    @property
    def uses_replay(self) -> bool:
        return self in (System.SGD_ER, System.ADAM_ER, System.ADAM_ER_TN)

    @property
    def uses_target(self) -> bool:
        return self is System.ADAM_ER_TN

# Mountain Car
MC_POSITION_MIN = -1.2
MC_POSITION_MAX = 0.6
MC_VELOCITY_MIN = -0.07
MC_VELOCITY_MAX = 0.07
MC_GOAL_POSITION = 0.5
MC_FORCE = 0.001
MC_GRAVITY = 0.0025
MC_RESET_LOW = -0.6
MC_RESET_HIGH = -0.4

# Acrobot (book dynamics)
ACROBOT_DT = 0.2
ACROBOT_LINK_LENGTH_1 = 1.0
ACROBOT_LINK_MASS_1 = 1.0
ACROBOT_LINK_MASS_2 = 1.0
ACROBOT_LINK_COM_POS_1 = 0.5
ACROBOT_LINK_COM_POS_2 = 0.5
ACROBOT_LINK_MOI = 1.0
ACROBOT_GRAVITY = 9.8
ACROBOT_MAX_VEL_1 = 4 * math.pi
ACROBOT_MAX_VEL_2 = 9 * math.pi
ACROBOT_TORQUES = (-1.0, 0.0, 1.0)
ACROBOT_RESET_RANGE = 0.1

# Episodes
MC_CONTROL_CUTOFF = 1000
ACROBOT_CUTOFF = 500
ROLLOUT_SAFETY_CAP = 100_000
NUM_ACTIONS = 3

# Numerics
ZERO_GRADIENT_NORM = 1e-12
EDGE_SNAP_TOLERANCE = 1e-9
