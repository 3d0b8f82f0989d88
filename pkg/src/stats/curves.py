# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from typing             import Sequence, Tuple, Union
from numpy.lib.stride_tricks import sliding_window_view
from ..utils.exceptions import StatsError
from .models            import RunRecord

Series = Union[Sequence[float], np.ndarray]

def _series(values: Union[Series, RunRecord]) -> np.ndarray:
    x = values.per_episode if isinstance(values, RunRecord) else np.asarray(values, dtype=np.float64)
    if x.size == 0:
        raise StatsError("Empty series")
    return x

def smooth(series: Series, window: int = 10) -> np.ndarray:
    """
    Trailing moving average; the first window - 1 entries average the
    entries available so far
    """
    if window < 1:
        raise StatsError(f"Smoothing window must be at least 1, got {window}")
    x = _series(series)
    if window == 1:
        return x.copy()

    out = np.empty_like(x)
    head = min(window - 1, x.shape[0])
    out[:head] = np.cumsum(x[:head]) / np.arange(1, head + 1)
    if x.shape[0] >= window:
        out[window - 1:] = sliding_window_view(x, window).mean(axis=1)
    return out

def auc(record: Union[RunRecord, Series]) -> float:
    """Area under the learning curve as the mean per-episode value"""
    return float(np.mean(_series(record)))

def final_performance(record: Union[RunRecord, Series], window: int = 10) -> float:
    """Last value of the smoothed curve"""
    return float(smooth(_series(record), window)[-1])

def mean_and_stderr(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Column means and standard errors (n - 1 denominator) of a runs x points matrix"""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
    n = matrix.shape[0]
    mean = matrix.mean(axis=0)
    if n < 2:
        return mean, np.zeros_like(mean)
    return mean, matrix.std(axis=0, ddof=1) / np.sqrt(n)

def aggregate(records: Sequence[RunRecord]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pointwise mean and standard error over runs

    A single run has zero standard error.

    Raises:
        StatsError: If there are no runs or their lengths differ
    """
    if not records:
        raise StatsError("Cannot aggregate zero runs")
    lengths = {r.episodes for r in records}
    if len(lengths) != 1:
        raise StatsError(f"Runs have different lengths: {sorted(lengths)}")
    return mean_and_stderr(np.stack([r.per_episode for r in records]))
