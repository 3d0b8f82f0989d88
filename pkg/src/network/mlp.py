# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from dataclasses        import dataclass
from typing             import List, Optional, Tuple
from ..features         import FeatureVector
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import NetworkError
from .models            import NetworkSpec

logger = logging.getLogger(LOGGER_NAME)

@dataclass
class _ForwardCache:
    x: FeatureVector
    pre: List[np.ndarray]
    post: List[np.ndarray]

class Network:
    """
    Fully-connected value network with ReLU hidden layers and a linear output

    All parameters live in one flat vector. Layout, input to output: each
    layer's weight matrix (fan_out, fan_in) row-major, then its bias.
    Gradients returned by backward() use the same layout.
    """

    def __init__(self, spec: NetworkSpec, params: Optional[np.ndarray] = None):
        """
        Args:
            spec: Layer widths
            params: Optional flat parameter vector (copied); zeros when omitted
        """
        self.spec = spec
        if params is None:
            self.params = np.zeros(spec.parameter_count, dtype=np.float64)
        else:
            self.params = np.array(params, dtype=np.float64).reshape(-1)
            if self.params.shape[0] != spec.parameter_count:
                raise NetworkError(
                    f"Expected {spec.parameter_count} parameters, got {self.params.shape[0]}"
                )
        self.weights, self.biases = self._views(self.params)
        self._cache: Optional[_ForwardCache] = None

    def _views(self, flat: np.ndarray) -> Tuple[List[np.ndarray], List[np.ndarray]]:
        """Per-layer weight and bias views into a flat vector"""
        weights, biases = [], []
        offset = 0
        for fan_out, fan_in in self.spec.layer_shapes:
            weights.append(flat[offset:offset + fan_out * fan_in].reshape(fan_out, fan_in))
            offset += fan_out * fan_in
            biases.append(flat[offset:offset + fan_out])
            offset += fan_out
        return weights, biases

    @property
    def num_layers(self) -> int:
        return len(self.weights)

    def forward(self, x: FeatureVector) -> np.ndarray:
        """
        Compute all outputs and keep the activations for backward()

        Raises:
            NetworkError: If the input length does not match the network
        """
        if x.length != self.spec.input_length:
            raise NetworkError(f"Input length {x.length} does not match network input {self.spec.input_length}")

        if x.is_sparse:
            z = self.weights[0][:, x.indices].sum(axis=1) + self.biases[0]
        else:
            z = self.weights[0] @ x.values + self.biases[0]

        pre, post = [z], []
        for w, b in zip(self.weights[1:], self.biases[1:]):
            a = np.maximum(z, 0.0)
            post.append(a)
            z = w @ a + b
            pre.append(z)

        self._cache = _ForwardCache(x=x, pre=pre, post=post)
        return z.copy()

    def value(self, x: FeatureVector, output_index: int = 0) -> float:
        return float(self.forward(x)[output_index])

    def backward(self, output_index: int) -> np.ndarray:
        """
        Gradient of one output of the last forward pass w.r.t. all parameters

        The ReLU derivative at exactly 0 is taken as 0.

        Raises:
            NetworkError: If forward() was not called or output_index is out of range
        """
        if self._cache is None:
            raise NetworkError("backward() called before forward()")
        if not 0 <= output_index < self.spec.outputs:
            raise NetworkError(f"Output index {output_index} out of range for {self.spec.outputs} outputs")

        cache = self._cache
        grad = np.zeros_like(self.params)
        grad_w, grad_b = self._views(grad)

        upstream = np.zeros(self.spec.outputs, dtype=np.float64)
        upstream[output_index] = 1.0
        for i in reversed(range(self.num_layers)):
            grad_b[i][:] = upstream
            if i > 0:
                grad_w[i][:] = np.outer(upstream, cache.post[i - 1])
                upstream = (self.weights[i].T @ upstream) * (cache.pre[i - 1] > 0.0)
            elif cache.x.is_sparse:
                grad_w[0][:, cache.x.indices] = upstream[:, None]
            else:
                grad_w[0][:] = np.outer(upstream, cache.x.values)
        return grad

    def hidden_activations(self, x: FeatureVector, layer: int = 0) -> np.ndarray:
        """Post-ReLU activations of a hidden layer for one input"""
        if not 0 <= layer < len(self.spec.hidden_layers):
            raise NetworkError(f"Network has no hidden layer {layer}")
        self.forward(x)
        return self._cache.post[layer].copy()

    def copy(self) -> 'Network':
        return Network(self.spec, self.params)

    def copy_from(self, other: 'Network') -> None:
        """Overwrite parameters in place with another network's"""
        if other.spec != self.spec:
            raise NetworkError("Cannot copy parameters between networks of different shapes")
        self.params[:] = other.params

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.params)))

def init_network(spec: NetworkSpec, rng: np.random.Generator) -> Network:
    """Xavier uniform weights in +-sqrt(6 / (fan_in + fan_out)), zero biases"""
    net = Network(spec)
    for w in net.weights:
        fan_out, fan_in = w.shape
        bound = np.sqrt(6.0 / (fan_in + fan_out))
        w[:] = rng.uniform(-bound, bound, size=w.shape)
    logger.debug(f"Initialized network {spec.layer_shapes} with {spec.parameter_count} parameters")
    return net
