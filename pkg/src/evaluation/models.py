# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from dataclasses        import dataclass
from ..utils.exceptions import EvaluationError

@dataclass(eq=False)
class EvalDataset:
    """On-policy state sample with Monte-Carlo true values"""
    states: np.ndarray       # (n, dims) raw observations
    true_values: np.ndarray  # (n,)

    def __post_init__(self):
        """
        Validate after initialization

        Raises:
            EvaluationError: If states and values are not aligned
        """
        self.states = np.atleast_2d(np.asarray(self.states, dtype=np.float64))
        self.true_values = np.asarray(self.true_values, dtype=np.float64).reshape(-1)
        if self.states.shape[0] != self.true_values.shape[0]:
            raise EvaluationError(
                f"Dataset has {self.states.shape[0]} states but {self.true_values.shape[0]} true values"
            )

    def __len__(self) -> int:
        return self.true_values.shape[0]

@dataclass(frozen=True)
class InterferenceSnapshot:
    """Mean pairwise interference after a given number of episodes"""
    episode_index: int
    mean_pairwise_interference: float

@dataclass(frozen=True)
class PairwiseStats:
    mean: float
    pairs_used: int
    pairs_skipped: int
