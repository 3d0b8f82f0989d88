# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import math
import numpy as np
from typing             import Optional, Sequence, Tuple
from ..network          import Network
from ..optim            import Optimizer
from ..utils.exceptions import AgentError, DivergenceError
from .models            import Transition
from .replay            import ReplayBuffer, TargetNetwork

def output_index(net: Network, action: int) -> int:
    """State-value networks have one output; action-value networks one per action"""
    return action if net.spec.outputs > 1 else 0

def td0_delta(net: Network, bootstrap: Network, tr: Transition, gamma: float = 1.0) -> float:
    """
    TD error r + gamma * V(s') - v(s)

    V(s') comes from the bootstrap network (the target network or net
    itself) and is 0 on terminal transitions. For action values both terms
    use the taken actions, which makes this the Sarsa(0) error.
    """
    bootstrap_value = 0.0
    if not tr.terminal:
        bootstrap_value = bootstrap.value(tr.s_next_features, output_index(bootstrap, tr.next_action))
    return tr.reward + gamma * bootstrap_value - net.value(tr.s_features, output_index(net, tr.action))

def pseudo_gradient(net: Network,
                    bootstrap: Network,
                    tr: Transition,
                    gamma: float = 1.0) -> Tuple[float, np.ndarray]:
    """
    (delta, -delta * grad v(s)): the semi-gradient TD step recast as descent

    Raises:
        DivergenceError: If delta is not finite
    """
    delta = td0_delta(net, bootstrap, tr, gamma)
    if not math.isfinite(delta):
        raise DivergenceError(f"TD error is not finite: {delta}")
    # td0_delta leaves net's forward cache at s
    grad = net.backward(output_index(net, tr.action))
    return delta, -delta * grad

def online_update(net: Network,
                  optimizer: Optimizer,
                  tr: Transition,
                  gamma: float = 1.0) -> float:
    """One optimizer step on the latest transition; returns delta"""
    delta, grad = pseudo_gradient(net, net, tr, gamma)
    optimizer.step(net.params, grad)
    return delta

def replay_update(net: Network,
                  target: Optional[TargetNetwork],
                  buffer: ReplayBuffer,
                  optimizer: Optimizer,
                  batch_size: int,
                  rng: np.random.Generator,
                  gamma: float = 1.0) -> np.ndarray:
    """
    One optimizer step on the mean pseudo-gradient of a sampled mini-batch

    Every delta in the batch is computed with the pre-update parameters.

    Returns:
        The batch's TD errors
    """
    batch = buffer.sample(batch_size, rng)
    bootstrap = target.net if target is not None else net

    grad = np.zeros_like(net.params)
    deltas = np.empty(len(batch), dtype=np.float64)
    for i, tr in enumerate(batch):
        deltas[i], g = pseudo_gradient(net, bootstrap, tr, gamma)
        grad += g
    optimizer.step(net.params, grad / len(batch))
    return deltas

def epsilon_greedy(qvalues: Sequence[float], epsilon: float, rng: np.random.Generator) -> int:
    """
    Greedy action with probability 1 - epsilon (ties broken uniformly),
    otherwise a uniformly random action

    Raises:
        AgentError: If qvalues is empty
        DivergenceError: If any q-value is NaN
    """
    q = np.asarray(qvalues, dtype=np.float64)
    if q.size == 0:
        raise AgentError("Cannot choose an action from empty q-values")
    if np.isnan(q).any():
        raise DivergenceError(f"q-values contain NaN: {q.tolist()}")

    if rng.random() < epsilon:
        return int(rng.integers(q.size))
    return int(rng.choice(np.flatnonzero(q == q.max())))
