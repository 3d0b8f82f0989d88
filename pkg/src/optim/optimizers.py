# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from typing             import Protocol
from ..utils.exceptions import OptimizerError
from .models            import AdamState, SgdConfig

def _check_shapes(params: np.ndarray, grad: np.ndarray) -> None:
    if params.shape != grad.shape:
        raise OptimizerError(f"Gradient shape {grad.shape} does not match parameters {params.shape}")

def sgd_step(params: np.ndarray, grad: np.ndarray, cfg: SgdConfig) -> np.ndarray:
    """params -= alpha * grad, in place"""
    _check_shapes(params, grad)
    params -= cfg.alpha * grad
    return params

def adam_step(params: np.ndarray, grad: np.ndarray, state: AdamState) -> np.ndarray:
    """One bias-corrected Adam step, updating params and state in place"""
    _check_shapes(params, grad)
    if state.m.shape != params.shape:
        raise OptimizerError(f"Adam state holds {state.m.shape[0]} moments for {params.shape[0]} parameters")

    state.t += 1
    state.m *= state.beta1
    state.m += (1.0 - state.beta1) * grad
    state.v *= state.beta2
    state.v += (1.0 - state.beta2) * grad * grad
    m_hat = state.m / (1.0 - state.beta1 ** state.t)
    v_hat = state.v / (1.0 - state.beta2 ** state.t)
    params -= state.alpha * m_hat / (np.sqrt(v_hat) + state.epsilon)
    return params

class Optimizer(Protocol):
    """Descent step on a flat parameter vector"""

    def step(self, params: np.ndarray, grad: np.ndarray) -> np.ndarray: ...

class Sgd:
    def __init__(self, cfg: SgdConfig):
        self.cfg = cfg

    def step(self, params: np.ndarray, grad: np.ndarray) -> np.ndarray:
        return sgd_step(params, grad, self.cfg)

class Adam:
    def __init__(self, state: AdamState):
        self.state = state

    def step(self, params: np.ndarray, grad: np.ndarray) -> np.ndarray:
        return adam_step(params, grad, self.state)
