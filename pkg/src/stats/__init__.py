from .models import RunRecord, TTestResult
from .curves import smooth, auc, final_performance, mean_and_stderr, aggregate
from .ttest  import regularized_incomplete_beta, t_two_sided_p, two_sample_ttest

__all__ = [
    'RunRecord',
    'TTestResult',
    'smooth',
    'auc',
    'final_performance',
    'mean_and_stderr',
    'aggregate',
    'regularized_incomplete_beta',
    't_two_sided_p',
    'two_sample_ttest'
]
