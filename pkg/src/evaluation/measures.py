# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import numpy as np
from ..features         import Featurizer
from ..network          import Network
from ..utils.constants  import LOGGER_NAME, ZERO_GRADIENT_NORM
from ..utils.exceptions import EvaluationError
from .models            import EvalDataset, PairwiseStats

logger = logging.getLogger(LOGGER_NAME)

def predictions(net: Network, featurizer: Featurizer, dataset: EvalDataset) -> np.ndarray:
    return np.array([net.value(featurizer(s), 0) for s in dataset.states])

def rve(net: Network, featurizer: Featurizer, dataset: EvalDataset) -> float:
    """
    Root mean squared value error of the network over the dataset

    Raises:
        EvaluationError: If the dataset is empty
    """
    if len(dataset) == 0:
        raise EvaluationError("Cannot compute value error on an empty dataset")
    errors = predictions(net, featurizer, dataset) - dataset.true_values
    return float(np.sqrt(np.mean(errors ** 2)))

def value_gradients(net: Network, featurizer: Featurizer, dataset: EvalDataset) -> np.ndarray:
    """(states, parameters) matrix of state-value gradients"""
    grads = np.empty((len(dataset), net.spec.parameter_count), dtype=np.float64)
    for i, s in enumerate(dataset.states):
        net.forward(featurizer(s))
        grads[i] = net.backward(0)
    return grads

def pairwise_cosine_stats(grads: np.ndarray) -> PairwiseStats:
    """
    Mean cosine similarity over unordered distinct pairs of gradient rows

    Pairs involving a gradient with norm below 1e-12 are skipped.

    Raises:
        EvaluationError: If fewer than two rows or no usable pair remain
    """
    n = grads.shape[0]
    if n < 2:
        raise EvaluationError(f"Pairwise interference needs at least 2 states, got {n}")

    norms = np.linalg.norm(grads, axis=1)
    usable = norms >= ZERO_GRADIENT_NORM
    k = int(usable.sum())
    total_pairs = n * (n - 1) // 2
    used_pairs = k * (k - 1) // 2
    if used_pairs == 0:
        raise EvaluationError(f"All {total_pairs} gradient pairs were skipped (zero gradients)")

    unit = grads[usable] / norms[usable, None]
    cosines = np.clip(unit @ unit.T, -1.0, 1.0)
    upper = np.triu_indices(k, 1)
    return PairwiseStats(
        mean=float(cosines[upper].mean()),
        pairs_used=used_pairs,
        pairs_skipped=total_pairs - used_pairs
    )

def pairwise_interference(net: Network, featurizer: Featurizer, dataset: EvalDataset) -> float:
    """Mean pairwise interference (gradient cosine) over the dataset"""
    stats = pairwise_cosine_stats(value_gradients(net, featurizer, dataset))
    if stats.pairs_skipped:
        logger.warning(f"Skipped {stats.pairs_skipped} of {stats.pairs_used + stats.pairs_skipped} "
                       f"interference pairs with zero gradients")
    return stats.mean
