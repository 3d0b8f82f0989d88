# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from typing             import Optional, Protocol
from ..utils.constants  import LOGGER_NAME, EDGE_SNAP_TOLERANCE, Preprocessing
from ..utils.exceptions import ConfigError
from .models            import BoundsSpec, FeatureVector, TileCoderConfig
from .tiles             import IndexHashTable

logger = logging.getLogger(LOGGER_NAME)

def _scaled(x: np.ndarray, bounds: BoundsSpec, n: int) -> np.ndarray:
    """Map each dimension onto [0, n], snapping values within rounding error of an integer"""
    u = (x - bounds.low) / (bounds.high - bounds.low) * n
    nearest = np.round(u)
    return np.where(np.abs(u - nearest) < EDGE_SNAP_TOLERANCE, nearest, u)

def normalize(obs: np.ndarray, bounds: BoundsSpec) -> FeatureVector:
    """Affinely map each dimension onto [-1, 1]"""
    x = np.clip(bounds.check(obs), bounds.low, bounds.high)
    return FeatureVector.dense(2.0 * (x - bounds.low) / (bounds.high - bounds.low) - 1.0)

def discretize(obs: np.ndarray, bounds: BoundsSpec, bins_per_dim: int) -> FeatureVector:
    """
    Bin each dimension separately and concatenate the one-hot codes

    Returns:
        Sparse vector of length D * bins_per_dim with exactly D active indices
    """
    if bins_per_dim < 1:
        raise ConfigError(f"bins_per_dim must be at least 1, got {bins_per_dim}")
    x = bounds.check(obs)
    bins = np.clip(np.floor(_scaled(x, bounds, bins_per_dim)), 0, bins_per_dim - 1).astype(np.int64)
    offsets = np.arange(bounds.dims, dtype=np.int64) * bins_per_dim
    return FeatureVector.sparse(offsets + bins, bounds.dims * bins_per_dim)

def tile_code(obs: np.ndarray,
              bounds: BoundsSpec,
              cfg: TileCoderConfig,
              table: IndexHashTable) -> FeatureVector:
    """
    Jointly tile all dimensions with num_tilings diagonally displaced grids

    Tiling t shifts every scaled coordinate by t / num_tilings; floor
    coordinates are clamped so each tiling has tiles_per_dim ** dims tiles.
    """
    x = bounds.check(obs)
    if x.shape[0] != cfg.dims:
        raise ConfigError(f"Tile coder expects {cfg.dims} dimensions, bounds have {x.shape[0]}")

    scaled = (x - bounds.low) / (bounds.high - bounds.low) * cfg.tiles_per_dim
    shifts = np.arange(cfg.num_tilings, dtype=np.float64)[:, None] / cfg.num_tilings
    shifted = scaled[None, :] + shifts
    nearest = np.round(shifted)
    shifted = np.where(np.abs(shifted - nearest) < EDGE_SNAP_TOLERANCE, nearest, shifted)
    coords = np.clip(np.floor(shifted), 0, cfg.tiles_per_dim - 1).astype(np.int64)

    indices = [
        table.index_allocate((t, *(int(c) for c in row)))
        for t, row in enumerate(coords)
    ]
    return FeatureVector.sparse(np.asarray(indices), cfg.capacity)

class Featurizer(Protocol):
    """Observation to network input"""
    bounds: BoundsSpec
    length: int

    def __call__(self, obs: np.ndarray) -> FeatureVector: ...

class RawFeaturizer:
    """Raw observations normalized to [-1, 1]"""

    def __init__(self, bounds: BoundsSpec):
        self.bounds = bounds
        self.length = bounds.dims

    def __call__(self, obs: np.ndarray) -> FeatureVector:
        return normalize(obs, self.bounds)

class BinFeaturizer:
    """Concatenated one-hot bins per dimension"""

    def __init__(self, bounds: BoundsSpec, bins_per_dim: int):
        if bins_per_dim < 1:
            raise ConfigError(f"bins_per_dim must be at least 1, got {bins_per_dim}")
        self.bounds = bounds
        self.bins_per_dim = bins_per_dim
        self.length = bounds.dims * bins_per_dim

    def __call__(self, obs: np.ndarray) -> FeatureVector:
        return discretize(obs, self.bounds, self.bins_per_dim)

class TileFeaturizer:
    """
    Tile-coded observations

    Owns a mutable index hash table, so each run must build its own.
    """

    def __init__(self, bounds: BoundsSpec, cfg: TileCoderConfig):
        if cfg.dims != bounds.dims:
            raise ConfigError(f"Tile coder has {cfg.dims} dimensions, bounds have {bounds.dims}")
        self.bounds = bounds
        self.cfg = cfg
        self.table = IndexHashTable(cfg.capacity)
        self.length = cfg.capacity

    def __call__(self, obs: np.ndarray) -> FeatureVector:
        return tile_code(obs, self.bounds, self.cfg, self.table)

def make_featurizer(preprocessing: Preprocessing,
                    bounds: BoundsSpec,
                    bins_per_dim: int,
                    tile_cfg: Optional[TileCoderConfig] = None) -> Featurizer:
    """
    Build the featurizer for a preprocessing strategy

    Args:
        preprocessing: raw, discretize or tilecode
        bounds: Observation bounds of the task
        bins_per_dim: Bins per dimension (discretize)
        tile_cfg: Tile coder settings (tilecode)
    """
    if preprocessing is Preprocessing.RAW:
        return RawFeaturizer(bounds)
    if preprocessing is Preprocessing.DISCRETIZE:
        return BinFeaturizer(bounds, bins_per_dim)
    if preprocessing is Preprocessing.TILECODE:
        if tile_cfg is None:
            raise ConfigError("Tile coding needs a TileCoderConfig")
        return TileFeaturizer(bounds, tile_cfg)
    raise ConfigError(f"Unknown preprocessing: {preprocessing}")
