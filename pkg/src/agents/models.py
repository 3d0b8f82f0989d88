# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

from dataclasses        import dataclass
from typing             import Optional
from ..features         import FeatureVector
from ..utils.constants  import System
from ..utils.exceptions import ConfigError

@dataclass(frozen=True, eq=False)
class Transition:
    """Sarsa experience tuple (S, A, R, S', A', terminal)"""
    s_features: FeatureVector
    action: int
    reward: float
    s_next_features: FeatureVector
    next_action: int
    terminal: bool

@dataclass(frozen=True)
class LearnerConfig:
    """
    Settings of one of the five learning systems

    Replay fields are set exactly for replay variants, the sync period
    exactly for the target-network variant and epsilon exactly for control.
    """
    variant: System
    control: bool
    gamma: float = 1.0
    epsilon: Optional[float] = None
    batch_size: Optional[int] = None
    buffer_capacity: Optional[int] = None
    target_sync_period: Optional[int] = None

    def __post_init__(self):
        """
        Validate configuration after initialization

        Raises:
            ConfigError: If a variant-dependent field is missing, superfluous or out of range
        """
        if not isinstance(self.variant, System):
            raise ConfigError(f"Invalid learning system: {self.variant}")

        self._require('epsilon', self.control)
        self._require('batch_size', self.variant.uses_replay)
        self._require('buffer_capacity', self.variant.uses_replay)
        self._require('target_sync_period', self.variant.uses_target)

        if self.epsilon is not None and not 0.0 <= self.epsilon <= 1.0:
            raise ConfigError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if self.batch_size is not None and self.batch_size < 1:
            raise ConfigError(f"batch_size must be positive, got {self.batch_size}")
        if self.buffer_capacity is not None and self.buffer_capacity < (self.batch_size or 1):
            raise ConfigError(
                f"buffer_capacity ({self.buffer_capacity}) must hold at least one batch ({self.batch_size})"
            )
        if self.target_sync_period is not None and self.target_sync_period < 1:
            raise ConfigError(f"target_sync_period must be positive, got {self.target_sync_period}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ConfigError(f"gamma must lie in [0, 1], got {self.gamma}")

    def _require(self, name: str, needed: bool) -> None:
        present = getattr(self, name) is not None
        if needed and not present:
            raise ConfigError(f"{self.variant.value} needs {name}")
        if present and not needed:
            raise ConfigError(f"{name} is not used by {self.variant.value} ({'control' if self.control else 'prediction'})")

    @classmethod
    def for_variant(cls,
                    variant: System,
                    control: bool,
                    gamma: float = 1.0,
                    epsilon: float = 0.1,
                    batch_size: int = 32,
                    buffer_capacity: int = 2000,
                    target_sync_period: int = 100) -> 'LearnerConfig':
        """Fill in only the fields the variant uses"""
        return cls(
            variant=variant,
            control=control,
            gamma=gamma,
            epsilon=epsilon if control else None,
            batch_size=batch_size if variant.uses_replay else None,
            buffer_capacity=buffer_capacity if variant.uses_replay else None,
            target_sync_period=target_sync_period if variant.uses_target else None
        )
