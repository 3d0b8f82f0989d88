from .config     import Config
from .constants  import LOGGER_NAME, Task, Preprocessing, System
from .exceptions import (
    LabError,
    ConfigError,
    SimulationError,
    FeatureError,
    NetworkError,
    OptimizerError,
    AgentError,
    DivergenceError,
    EvaluationError,
    StatsError,
    ZeroVarianceError,
    HarnessError
)
__all__ = [
    'Config',
    'LOGGER_NAME',
    'Task',
    'Preprocessing',
    'System',
    'LabError',
    'ConfigError',
    'SimulationError',
    'FeatureError',
    'NetworkError',
    'OptimizerError',
    'AgentError',
    'DivergenceError',
    'EvaluationError',
    'StatsError',
    'ZeroVarianceError',
    'HarnessError'
]
