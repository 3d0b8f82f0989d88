from .models   import EvalDataset, InterferenceSnapshot, PairwiseStats
from .dataset  import (
    true_value,
    build_eval_dataset,
    save_dataset,
    load_dataset,
    default_prediction_dataset
)
from .measures import (
    predictions,
    rve,
    value_gradients,
    pairwise_cosine_stats,
    pairwise_interference
)
from .schedule import interference_schedule, take_snapshot

__all__ = [
    'EvalDataset',
    'InterferenceSnapshot',
    'PairwiseStats',
    'true_value',
    'build_eval_dataset',
    'save_dataset',
    'load_dataset',
    'default_prediction_dataset',
    'predictions',
    'rve',
    'value_gradients',
    'pairwise_cosine_stats',
    'pairwise_interference',
    'interference_schedule',
    'take_snapshot'
]
