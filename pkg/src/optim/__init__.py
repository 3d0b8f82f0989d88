from .models     import SgdConfig, AdamState
from .optimizers import Optimizer, Sgd, Adam, sgd_step, adam_step

__all__ = ['SgdConfig', 'AdamState', 'Optimizer', 'Sgd', 'Adam', 'sgd_step', 'adam_step']
