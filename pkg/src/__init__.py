from .envs       import MountainCar, Acrobot, make_env, energy_pumping_action
from .features   import BoundsSpec, FeatureVector, TileCoderConfig, make_featurizer
from .network    import NetworkSpec, Network, init_network
from .optim      import Sgd, Adam, SgdConfig, AdamState
from .agents     import Learner, LearnerConfig
from .evaluation import EvalDataset, rve, pairwise_interference
from .stats      import RunRecord, TTestResult, two_sample_ttest

from .utils      import (
    Config,
    Task,
    Preprocessing,
    System,
    LabError,
    ConfigError,
    HarnessError
)

__all__ = [
    'MountainCar',
    'Acrobot',
    'make_env',
    'energy_pumping_action',
    'BoundsSpec',
    'FeatureVector',
    'TileCoderConfig',
    'make_featurizer',
    'NetworkSpec',
    'Network',
    'init_network',
    'Sgd',
    'Adam',
    'SgdConfig',
    'AdamState',
    'Learner',
    'LearnerConfig',
    'EvalDataset',
    'rve',
    'pairwise_interference',
    'RunRecord',
    'TTestResult',
    'two_sample_ttest',
    'Config',
    'Task',
    'Preprocessing',
    'System',
    'LabError',
    'ConfigError',
    'HarnessError'
]
