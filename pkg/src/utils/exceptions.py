# src/utils/exceptions.py
class LabError(Exception):
    """Base exception for the interference lab"""
    pass

class ConfigError(LabError):
    """Configuration-related errors"""
    pass

class SimulationError(LabError):
    """Environment rollout errors (safety cap exceeded)"""
    pass

class FeatureError(LabError):
    """Input preprocessing errors"""
    pass

class NetworkError(LabError):
    """Value network errors"""
    pass

class OptimizerError(LabError):
    """Parameter update errors"""
    pass

class AgentError(LabError):
    """Learner errors"""
    pass

class DivergenceError(AgentError):
    """Non-finite values or TD errors during learning"""
    pass

class EvaluationError(LabError):
    """Value error and interference measurement errors"""
    pass

class StatsError(LabError):
    """Statistics errors"""
    pass

class ZeroVarianceError(StatsError):
    """Both samples are constant and equal in spread, t is undefined"""
    pass

class HarnessError(LabError):
    """Experiment orchestration and file emission errors"""
    pass
