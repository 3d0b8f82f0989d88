from .models import BoundsSpec, FeatureVector, TileCoderConfig
from .tiles  import IndexHashTable, fnv1a64
from .coders import (
    Featurizer,
    RawFeaturizer,
    BinFeaturizer,
    TileFeaturizer,
    normalize,
    discretize,
    tile_code,
    make_featurizer
)

__all__ = [
    'BoundsSpec',
    'FeatureVector',
    'TileCoderConfig',
    'IndexHashTable',
    'fnv1a64',
    'Featurizer',
    'RawFeaturizer',
    'BinFeaturizer',
    'TileFeaturizer',
    'normalize',
    'discretize',
    'tile_code',
    'make_featurizer'
]
