# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from dataclasses        import dataclass
from typing             import Optional, Tuple
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import ConfigError, FeatureError

logger = logging.getLogger(LOGGER_NAME)

@dataclass(frozen=True)
class BoundsSpec:
    """Per-dimension (min, max) ranges of an observation"""
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]

    def __post_init__(self):
        """
        Validate configuration after initialization

        Raises:
            ConfigError: If the ranges are empty or inverted
        """
        if len(self.lower) != len(self.upper) or not self.lower:
            raise ConfigError(
                f"Bounds need matching non-empty lower/upper, got {len(self.lower)} and {len(self.upper)}"
            )
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if not lo < hi:
                raise ConfigError(f"Bounds for dimension {j} must satisfy min < max, got ({lo}, {hi})")

    @property
    def dims(self) -> int:
        return len(self.lower)

    @property
    def low(self) -> np.ndarray:
        return np.asarray(self.lower, dtype=np.float64)

    @property
    def high(self) -> np.ndarray:
        return np.asarray(self.upper, dtype=np.float64)

    def check(self, obs: np.ndarray) -> np.ndarray:
        """Return obs as a float vector, rejecting a dimension mismatch"""
        x = np.asarray(obs, dtype=np.float64).reshape(-1)
        if x.shape[0] != self.dims:
            raise FeatureError(f"Observation has {x.shape[0]} dimensions, bounds have {self.dims}")
        return x

@dataclass(frozen=True, eq=False)
class FeatureVector:
    """
    Network input: either dense values or a set of active (value 1) indices

    Sparse vectors are never materialized by the network; their first-layer
    product is the sum of the selected weight columns.
    """
    length: int
    values: Optional[np.ndarray] = None
    indices: Optional[np.ndarray] = None

    @classmethod
    def dense(cls, values: np.ndarray) -> 'FeatureVector':
        v = np.asarray(values, dtype=np.float64).reshape(-1)
        return cls(length=v.shape[0], values=v)

    @classmethod
    def sparse(cls, indices: np.ndarray, length: int) -> 'FeatureVector':
        idx = np.unique(np.asarray(indices, dtype=np.int64))
        if idx.size and (idx[0] < 0 or idx[-1] >= length):
            raise FeatureError(f"Active indices must lie in [0, {length}), got {idx.tolist()}")
        return cls(length=length, indices=idx)

    @property
    def is_sparse(self) -> bool:
        return self.indices is not None

    def to_dense(self) -> np.ndarray:
        if not self.is_sparse:
            return self.values.copy()
        out = np.zeros(self.length, dtype=np.float64)
        out[self.indices] = 1.0
        return out

@dataclass(frozen=True)
class TileCoderConfig:
    """Joint tile coding over all observation dimensions"""
    dims: int
    capacity: int
    num_tilings: int = 8
    tiles_per_dim: int = 4
    joint: bool = True

    def __post_init__(self):
        """
        Validate configuration after initialization

        Raises:
            ConfigError: If counts are not positive, capacity is too small
                or independent tilings are requested
        """
        for name in ('dims', 'capacity', 'num_tilings', 'tiles_per_dim'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value}")

        if self.capacity < self.num_tilings:
            raise ConfigError(
                f"capacity ({self.capacity}) must be at least num_tilings ({self.num_tilings})"
            )

        if not self.joint:
            raise ConfigError("Only joint tilings are supported")

        if self.num_tilings & (self.num_tilings - 1):
            logger.warning(f"num_tilings = {self.num_tilings} is not a power of two")

    @property
    def tiles_per_tiling(self) -> int:
        return self.tiles_per_dim ** self.dims

    @property
    def collision_free(self) -> bool:
        return self.capacity >= self.num_tilings * self.tiles_per_tiling
