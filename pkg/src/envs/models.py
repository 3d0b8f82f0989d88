# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from dataclasses        import dataclass, field
from typing             import List, Optional, Union
from ..utils.exceptions import ConfigError

@dataclass(frozen=True)
class MountainCarState:
    """Car position and velocity"""
    position: float
    velocity: float

    def as_array(self) -> np.ndarray:
        return np.array([self.position, self.velocity], dtype=np.float64)

@dataclass(frozen=True)
class AcrobotState:
    """Two link angles and their angular velocities"""
    theta1: float
    theta2: float
    omega1: float
    omega2: float

    def as_array(self) -> np.ndarray:
        return np.array([self.theta1, self.theta2, self.omega1, self.omega2], dtype=np.float64)

EnvState = Union[MountainCarState, AcrobotState]

@dataclass(frozen=True)
class StepResult:
    """Outcome of one environment transition"""
    next_state: EnvState
    reward: float
    terminal: bool

@dataclass(frozen=True)
class EpisodeConfig:
    """Episode lifecycle settings"""
    cutoff_steps: Optional[int] = None
    discount: float = 1.0

    def __post_init__(self):
        """
        Validate configuration after initialization

        Raises:
            ConfigError: If the cutoff is not positive or the task is discounted
        """
        if self.cutoff_steps is not None and self.cutoff_steps < 1:
            raise ConfigError(f"Cutoff must be a positive integer, got {self.cutoff_steps}")
        if self.discount != 1.0:
            raise ConfigError(f"All tasks are undiscounted, got discount {self.discount}")

@dataclass(frozen=True)
class TrajectoryStep:
    state: EnvState
    action: int
    result: StepResult

@dataclass
class EpisodeOutcome:
    """A finished (or cut off) episode"""
    trajectory: List[TrajectoryStep] = field(default_factory=list)
    terminated_naturally: bool = False

    @property
    def steps(self) -> int:
        return len(self.trajectory)

    @property
    def undiscounted_return(self) -> float:
        return float(sum(step.result.reward for step in self.trajectory))
