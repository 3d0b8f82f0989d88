from .models  import Transition, LearnerConfig
from .replay  import ReplayBuffer, TargetNetwork
from .td      import (
    output_index,
    td0_delta,
    pseudo_gradient,
    online_update,
    replay_update,
    epsilon_greedy
)
from .learner import Learner

__all__ = [
    'Transition',
    'LearnerConfig',
    'ReplayBuffer',
    'TargetNetwork',
    'output_index',
    'td0_delta',
    'pseudo_gradient',
    'online_update',
    'replay_update',
    'epsilon_greedy',
    'Learner'
]
