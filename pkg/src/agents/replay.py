# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from typing             import List, Optional
from ..network          import Network
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import AgentError, ConfigError
from .models            import Transition

logger = logging.getLogger(LOGGER_NAME)

class ReplayBuffer:
    """Fixed-capacity FIFO ring of transitions"""

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ConfigError(f"Replay capacity must be positive, got {capacity}")
        self.capacity = capacity
        self._items: List[Optional[Transition]] = [None] * capacity
        self.inserted = 0

    def __len__(self) -> int:
        return min(self.inserted, self.capacity)

    def push(self, tr: Transition) -> None:
        """Store a transition, evicting the oldest when full"""
        self._items[self.inserted % self.capacity] = tr
        self.inserted += 1

    def sample(self, batch_size: int, rng: np.random.Generator) -> List[Transition]:
        """
        Uniform sample without replacement

        Raises:
            AgentError: If fewer than batch_size transitions are stored
        """
        size = len(self)
        if size < batch_size:
            raise AgentError(f"Cannot sample {batch_size} transitions from a buffer holding {size}")
        return [self._items[i] for i in rng.choice(size, size=batch_size, replace=False)]

class TargetNetwork:
    """Frozen copy of the learned network, re-synced every period environment steps"""

    def __init__(self, live: Network, period: int):
        if period < 1:
            raise ConfigError(f"Target sync period must be positive, got {period}")
        self.net = live.copy()
        self.period = period
        self.steps_since_sync = 0

    def tick(self, live: Network) -> bool:
        """Count one environment step, syncing when the period is reached"""
        self.steps_since_sync += 1
        if self.steps_since_sync < self.period:
            return False
        self.sync(live)
        return True

    def sync(self, live: Network) -> None:
        self.net.copy_from(live)
        self.steps_since_sync = 0
        logger.debug("Target network synced")
