# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from dataclasses        import dataclass
from typing             import Iterator, Tuple
from ..features         import Featurizer
from ..utils.exceptions import NetworkError
from .mlp               import Network

@dataclass
class ResponseMap:
    """First-hidden-layer activations over a 2-D lattice of states"""
    x0: np.ndarray
    x1: np.ndarray
    activations: np.ndarray  # (grid points, hidden units)

    @property
    def units(self) -> int:
        return self.activations.shape[1]

    def rows(self) -> Iterator[Tuple[int, float, float, float]]:
        """(unit, x0, x1, activation) rows ordered by unit, then grid point"""
        for unit in range(self.units):
            for p in range(self.x0.shape[0]):
                yield unit, float(self.x0[p]), float(self.x1[p]), float(self.activations[p, unit])

def response_map(net: Network, featurizer: Featurizer, grid_points: int) -> ResponseMap:
    """
    Evaluate every first-layer hidden unit on a grid_points x grid_points lattice

    Raises:
        NetworkError: If the state space is not 2-D or the network has no hidden layer
    """
    bounds = featurizer.bounds
    if bounds.dims != 2:
        raise NetworkError(f"Response maps need a 2-D state space, got {bounds.dims} dimensions")
    if grid_points < 1:
        raise NetworkError(f"Grid needs at least one point per axis, got {grid_points}")

    axis0 = np.linspace(bounds.lower[0], bounds.upper[0], grid_points)
    axis1 = np.linspace(bounds.lower[1], bounds.upper[1], grid_points)
    x0, x1 = (g.ravel() for g in np.meshgrid(axis0, axis1, indexing='ij'))

    activations = np.stack([
        net.hidden_activations(featurizer(np.array([a, b])))
        for a, b in zip(x0, x1)
    ])
    return ResponseMap(x0=x0, x1=x1, activations=activations)
