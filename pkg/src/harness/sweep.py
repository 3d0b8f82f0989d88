# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import math
import multiprocessing
import numpy as np
from concurrent.futures import ProcessPoolExecutor
from logging.handlers   import QueueHandler, QueueListener
from dataclasses        import replace
from itertools          import product
from typing             import Dict, List, Optional, Sequence, Tuple
from ..evaluation       import EvalDataset, default_prediction_dataset
from ..stats            import (
    RunRecord,
    TTestResult,
    auc,
    final_performance,
    mean_and_stderr,
    two_sample_ttest
)
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import ConfigError, HarnessError, ZeroVarianceError
from .models            import (
    Comparison,
    ExperimentConfig,
    Setting,
    SettingResult,
    SizeAxis,
    SizeRow,
    SweepResult
)
from .runner            import run_single

logger = logging.getLogger(LOGGER_NAME)

Job = Tuple[ExperimentConfig, Setting, int, Optional[EvalDataset], int, int]

def sweep_settings(cfg: ExperimentConfig) -> List[Setting]:
    """Cartesian product of the grids, step-size outermost"""
    return [
        Setting(step_size=alpha, beta1=b1, beta2=b2, target_sync_period=period)
        for alpha, b1, b2, period in product(
            cfg.step_size_grid,
            cfg.beta1_grid or (None,),
            cfg.beta2_grid or (None,),
            cfg.target_sync_grid or (None,)
        )
    ]

def init_worker_logging(queue, level: int) -> None:
    """Replace a worker's inherited log handlers with one that forwards to the parent"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.addHandler(QueueHandler(queue))
    root.setLevel(level)

def _run_job(job: Job) -> Tuple[int, int, RunRecord]:
    cfg, setting, seed, dataset, run_index, setting_index = job
    return setting_index, run_index, run_single(cfg, setting, seed, dataset, run_index)

def summarize_setting(setting: Setting, records: Sequence[RunRecord]) -> SettingResult:
    """Per-run AUCs of one setting with their mean and standard error"""
    aucs = np.array([auc(r) for r in records])
    mean, stderr = mean_and_stderr(aucs[:, None])
    return SettingResult(setting=setting, records=list(records), aucs=aucs,
                         mean_auc=float(mean[0]), stderr=float(stderr[0]))

def run_sweep(cfg: ExperimentConfig,
              dataset: Optional[EvalDataset] = None,
              workers: int = 1) -> SweepResult:
    """
    Run cfg.runs seeded runs for every grid setting and pick the best

    Run i of every setting uses seed base_seed + i. Results are keyed by
    (setting index, run index) so serial and parallel sweeps are identical.

    Args:
        cfg: Experiment configuration
        dataset: Evaluation states for prediction; built from cfg when omitted
        workers: Worker processes (1 runs serially)
    """
    if workers < 1:
        raise ConfigError(f"workers must be at least 1, got {workers}")
    if cfg.task.is_prediction and dataset is None:
        dataset = default_prediction_dataset(cfg.dataset_steps, cfg.dataset_size, cfg.dataset_seed)

    settings = sweep_settings(cfg)
    jobs: List[Job] = [
        (cfg, setting, cfg.base_seed + run_index, dataset, run_index, setting_index)
        for setting_index, setting in enumerate(settings)
        for run_index in range(cfg.runs)
    ]
    logger.info(f"Sweeping {cfg.label}: {len(settings)} settings x {cfg.runs} runs on {workers} worker(s)")

    results: Dict[Tuple[int, int], RunRecord] = {}
    if workers == 1:
        for job in jobs:
            setting_index, run_index, record = _run_job(job)
            results[setting_index, run_index] = record
    else:
        # only the parent process writes (and rotates) the log file
        root = logging.getLogger()
        queue = multiprocessing.Queue()
        listener = QueueListener(queue, *root.handlers, respect_handler_level=True)
        listener.start()
        try:
            with ProcessPoolExecutor(max_workers=workers, initializer=init_worker_logging,
                                     initargs=(queue, root.level)) as executor:
                for setting_index, run_index, record in executor.map(_run_job, jobs):
                    results[setting_index, run_index] = record
        finally:
            listener.stop()

    sweep = SweepResult(config=cfg, settings=[
        summarize_setting(setting, [results[i, r] for r in range(cfg.runs)])
        for i, setting in enumerate(settings)
    ])
    best = sweep.best
    logger.info(f"Best {cfg.label}: {best.setting.label}, mean AUC {best.mean_auc:g} "
                f"+- {best.stderr:g} ({best.diverged_runs} diverged)")
    return sweep

def safe_ttest(a: Sequence[float], b: Sequence[float], equal_var: bool = True) -> TTestResult:
    """
    two_sample_ttest that settles constant samples instead of failing

    Two constant samples give t = 0, p = 1 when equal and an infinite t
    with p = 0 otherwise.
    """
    try:
        return two_sample_ttest(a, b, equal_var=equal_var)
    except ZeroVarianceError:
        diff = float(np.mean(a) - np.mean(b))
        logger.warning(f"Both samples are constant (difference {diff:g})")
        df = float(len(a) + len(b) - 2)
        if diff == 0.0:
            return TTestResult(t_statistic=0.0, degrees_of_freedom=df, p_value=1.0, significant_at_5pct=False)
        return TTestResult(t_statistic=math.copysign(math.inf, diff), degrees_of_freedom=df,
                           p_value=0.0, significant_at_5pct=True)

def compare_results(a: SweepResult, b: SweepResult) -> Comparison:
    """
    t-tests between the best settings of two completed sweeps

    Tests the per-run AUCs and the per-run final smoothed performance.

    Raises:
        HarnessError: If the sweeps differ in run or episode counts
    """
    if a.config.runs != b.config.runs:
        raise HarnessError(f"Cannot compare {a.config.runs} runs with {b.config.runs} runs")
    if a.config.episodes != b.config.episodes:
        raise HarnessError(f"Cannot compare {a.config.episodes} episodes with {b.config.episodes} episodes")

    best_a, best_b = a.best, b.best
    equal_var = a.config.equal_var
    window = a.config.smoothing_window
    auc_test = safe_ttest(best_a.aucs, best_b.aucs, equal_var)
    final_test = safe_ttest([final_performance(r, window) for r in best_a.records],
                            [final_performance(r, window) for r in best_b.records], equal_var)
    logger.info(f"{a.config.label} vs {b.config.label}: t = {auc_test.t_statistic:g}, "
                f"df = {auc_test.degrees_of_freedom:g}, p = {auc_test.p_value:g}")
    return Comparison(sweep_a=a, sweep_b=b, auc_test=auc_test, final_test=final_test)

def compare(cfg_a: ExperimentConfig,
            cfg_b: ExperimentConfig,
            dataset: Optional[EvalDataset] = None,
            workers: int = 1) -> Comparison:
    """Sweep two configurations and compare their best settings"""
    if cfg_a.runs != cfg_b.runs or cfg_a.episodes != cfg_b.episodes:
        raise HarnessError(
            f"Compared configs need equal runs and episodes, got {cfg_a.runs}x{cfg_a.episodes} "
            f"and {cfg_b.runs}x{cfg_b.episodes}"
        )
    if dataset is None and cfg_a.task.is_prediction:
        dataset = default_prediction_dataset(cfg_a.dataset_steps, cfg_a.dataset_size, cfg_a.dataset_seed)
    return compare_results(run_sweep(cfg_a, dataset, workers), run_sweep(cfg_b, dataset, workers))

def network_size_sweep(cfg: ExperimentConfig,
                       axis: SizeAxis,
                       dataset: Optional[EvalDataset] = None,
                       workers: int = 1) -> Tuple[List[SizeRow], List[SweepResult]]:
    """
    Time-averaged interference per network size

    For every size on the axis the grid is swept with interference
    measurement on; each run of the best setting is reduced to its mean
    snapshot interference, then summarized by mean and standard deviation.

    Raises:
        ConfigError: If the task is not prediction
    """
    if not cfg.task.is_prediction:
        raise ConfigError("Network-size sweeps need the prediction task")
    if dataset is None:
        dataset = default_prediction_dataset(cfg.dataset_steps, cfg.dataset_size, cfg.dataset_seed)

    rows: List[SizeRow] = []
    sweeps: List[SweepResult] = []
    for size in axis.sizes:
        sized = replace(cfg, hidden_layers=axis.hidden_layers(size), measure_interference=True)
        sweep = run_sweep(sized, dataset, workers)
        per_run = np.array([r.mean_interference for r in sweep.best.records if r.snapshots])
        sd = float(per_run.std(ddof=1)) if per_run.shape[0] > 1 else 0.0
        rows.append(SizeRow(size=size, mean_pi=float(per_run.mean()), sd=sd, runs=per_run.shape[0]))
        sweeps.append(sweep)
        logger.info(f"{axis.value} = {size}: interference {rows[-1].mean_pi:.4f} +- {sd:.4f}")
    return rows, sweeps
