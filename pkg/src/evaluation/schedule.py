# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

from typing    import List
from ..features import Featurizer
from ..network  import Network
from .measures  import pairwise_interference
from .models    import EvalDataset, InterferenceSnapshot

EARLY_SNAPSHOTS = (0, 1, 5, 10)
SNAPSHOT_PERIOD = 25

def interference_schedule(max_episodes: int) -> List[int]:
    """Episodes after which interference is measured: 0 (post-init), 1, 5, 10, then every 25"""
    early = [e for e in EARLY_SNAPSHOTS if e <= max_episodes]
    return early + list(range(SNAPSHOT_PERIOD, max_episodes + 1, SNAPSHOT_PERIOD))

def take_snapshot(net: Network,
                  featurizer: Featurizer,
                  dataset: EvalDataset,
                  episode_index: int) -> InterferenceSnapshot:
    return InterferenceSnapshot(
        episode_index=episode_index,
        mean_pairwise_interference=pairwise_interference(net, featurizer, dataset)
    )
