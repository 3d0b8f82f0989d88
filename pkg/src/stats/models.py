# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from dataclasses   import dataclass, field
from typing        import List
from ..evaluation  import InterferenceSnapshot

@dataclass(eq=False)
class RunRecord:
    """Per-episode metric series of one seeded run"""
    run_seed: int
    per_episode: np.ndarray
    run_index: int = 0
    snapshots: List[InterferenceSnapshot] = field(default_factory=list)
    diverged: bool = False

    def __post_init__(self):
        self.per_episode = np.asarray(self.per_episode, dtype=np.float64).reshape(-1)

    @property
    def episodes(self) -> int:
        return self.per_episode.shape[0]

    @property
    def mean_interference(self) -> float:
        """Time-averaged interference over all snapshots"""
        return float(np.mean([s.mean_pairwise_interference for s in self.snapshots]))

@dataclass(frozen=True)
class TTestResult:
    t_statistic: float
    degrees_of_freedom: float
    p_value: float
    significant_at_5pct: bool
