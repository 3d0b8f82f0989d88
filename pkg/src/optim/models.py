# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from dataclasses        import dataclass, field
from ..utils.exceptions import ConfigError

@dataclass(frozen=True)
class SgdConfig:
    """Global step-size"""
    alpha: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ConfigError(f"Step-size must be positive, got {self.alpha}")

@dataclass
class AdamState:
    """Adam hyper-parameters plus moment estimates"""
    alpha: float
    size: int
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    m: np.ndarray = field(init=False, repr=False)
    v: np.ndarray = field(init=False, repr=False)
    t: int = field(init=False, default=0)

    def __post_init__(self):
        """
        Validate configuration and allocate zeroed moments

        Raises:
            ConfigError: If a hyper-parameter is out of range
        """
        if not self.alpha > 0:
            raise ConfigError(f"Step-size must be positive, got {self.alpha}")
        for name in ('beta1', 'beta2'):
            value = getattr(self, name)
            if not 0.0 <= value < 1.0:
                raise ConfigError(f"{name} must lie in [0, 1), got {value}")
        if not self.epsilon > 0:
            raise ConfigError(f"epsilon must be positive, got {self.epsilon}")
        self.m = np.zeros(self.size, dtype=np.float64)
        self.v = np.zeros(self.size, dtype=np.float64)
