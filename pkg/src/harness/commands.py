# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import argparse
import logging
import numpy as np
from dataclasses        import replace
from pathlib            import Path
from typing             import Any, Dict, List, Optional
from ..evaluation       import (
    EvalDataset,
    default_prediction_dataset,
    load_dataset,
    save_dataset
)
from ..network          import response_map
from ..stats            import auc
from ..utils.config     import Config
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import ConfigError
from .emit              import (
    Table,
    emit,
    interference_table,
    net_size_table,
    paired_curves_table,
    read_per_run,
    read_table,
    response_map_table,
    sensitivity_table,
    setting_tables,
    sweep_summary_table,
    ttest_table
)
from .models            import ExperimentConfig, Setting, SizeAxis, SweepResult
from .plots             import plot_table
from .profiles          import load_experiment_config, profile_workers
from .runner            import train_network
from .sweep             import compare_results, network_size_sweep, run_sweep, safe_ttest

logger = logging.getLogger(LOGGER_NAME)

DEFAULT_ADAM_BETAS = (0.9, 0.999)

def experiment_config(args: argparse.Namespace, **extra: Any) -> ExperimentConfig:
    """ExperimentConfig from the profile, the --config document and the common flags"""
    overrides: Dict[str, Any] = {
        'runs': args.runs,
        'episodes': args.episodes,
        'base_seed': args.seed,
        'step_size_grid': [args.step_size] if args.step_size is not None else None,
    }
    overrides.update(extra)
    return load_experiment_config(args.task, args.preprocessing, args.system, args.profile,
                                  Path(args.config) if args.config else None, overrides)

def out_dir(args: argparse.Namespace) -> Path:
    return Path(args.out) if args.out else Config().out_dir

def workers(args: argparse.Namespace) -> int:
    return args.workers if args.workers is not None else profile_workers(args.profile)

def prediction_dataset(args: argparse.Namespace, cfg: ExperimentConfig) -> Optional[EvalDataset]:
    """Evaluation states from --dataset, or a fresh walk from the profile settings"""
    if not cfg.task.is_prediction:
        return None
    if args.dataset:
        return load_dataset(Path(args.dataset))
    return default_prediction_dataset(cfg.dataset_steps, cfg.dataset_size, cfg.dataset_seed)

def single_setting(args: argparse.Namespace, cfg: ExperimentConfig) -> Setting:
    """
    The one setting named by --step-size, --beta1, --beta2 and --target-sync

    Raises:
        ConfigError: If no step-size is given
    """
    if args.step_size is None:
        raise ConfigError("This command runs one setting and needs --step-size")
    beta1 = beta2 = period = None
    if cfg.system.uses_adam:
        beta1 = args.beta1 if args.beta1 is not None else DEFAULT_ADAM_BETAS[0]
        beta2 = args.beta2 if args.beta2 is not None else DEFAULT_ADAM_BETAS[1]
    if cfg.system.uses_target:
        period = args.target_sync if args.target_sync is not None else cfg.target_sync_grid[0]
    return Setting(step_size=args.step_size, beta1=beta1, beta2=beta2, target_sync_period=period)

def pinned(cfg: ExperimentConfig, setting: Setting) -> ExperimentConfig:
    """Config whose grids hold exactly one setting"""
    return replace(
        cfg,
        step_size_grid=(setting.step_size,),
        beta1_grid=(setting.beta1,) if setting.beta1 is not None else (),
        beta2_grid=(setting.beta2,) if setting.beta2 is not None else (),
        target_sync_grid=(setting.target_sync_period,) if setting.target_sync_period is not None else ()
    )

def file_prefix(cfg: ExperimentConfig) -> str:
    return cfg.label.replace('/', '_')

def best_tables(sweep: SweepResult) -> List[Table]:
    """Sweep summary, sensitivity slice and the best setting's curves"""
    cfg = sweep.config
    prefix = file_prefix(cfg)
    best = sweep.best
    tables = [
        sweep_summary_table(f"{prefix}_sweep", sweep),
        sensitivity_table(f"{prefix}_sensitivity", sweep, cfg.label),
    ]
    tables += setting_tables(f"{prefix}_best", best, f"{cfg.label} [{best.setting.label}]")
    if cfg.measure_interference:
        tables.append(interference_table(f"{prefix}_interference", best.records, cfg.label))
    return tables

def cmd_run(args: argparse.Namespace) -> int:
    cfg = experiment_config(args)
    cfg = pinned(cfg, single_setting(args, cfg))
    if args.interference:
        cfg = replace(cfg, measure_interference=True)
    sweep = run_sweep(cfg, prediction_dataset(args, cfg), workers(args))
    result = sweep.settings[0]
    tables = setting_tables(file_prefix(cfg), result, f"{cfg.label} [{result.setting.label}]")
    if cfg.measure_interference:
        tables.append(interference_table(f"{file_prefix(cfg)}_interference", result.records, cfg.label))
    emit(tables, out_dir(args), args.plot)
    logger.info(f"Mean AUC {result.mean_auc:g} +- {result.stderr:g}")
    return 0

def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = experiment_config(args)
    sweep = run_sweep(cfg, prediction_dataset(args, cfg), workers(args))
    emit(best_tables(sweep), out_dir(args), args.plot)
    return 0

def cmd_compare(args: argparse.Namespace) -> int:
    """Sweep --preprocessing and --against on the same task and system, then t-test their best settings"""
    cfg_a = experiment_config(args)
    cfg_b = replace(cfg_a, preprocessing=args.against)
    dataset = prediction_dataset(args, cfg_a)
    n = workers(args)
    comparison = compare_results(run_sweep(cfg_a, dataset, n), run_sweep(cfg_b, dataset, n))

    task, system = cfg_a.task.value, cfg_a.system.value
    a, b = cfg_a.preprocessing.value, cfg_b.preprocessing.value
    stem = f"{task}_{system}_{a}_vs_{b}"
    tables = best_tables(comparison.sweep_a) + best_tables(comparison.sweep_b) + [
        paired_curves_table(f"{stem}_curves", comparison, f"{task}/{system}: {a} (a) vs {b} (b)"),
        ttest_table(f"{stem}_ttest", task, system, a, b, comparison.auc_test),
        ttest_table(f"{stem}_final_ttest", task, system, a, b, comparison.final_test),
    ]
    emit(tables, out_dir(args), args.plot)
    return 0

def cmd_eval_dataset(args: argparse.Namespace) -> int:
    cfg = load_experiment_config('mc_prediction', args.preprocessing or 'raw', args.system or 'sgd', args.profile,
                                 Path(args.config) if args.config else None, {'dataset_seed': args.seed})
    dataset = default_prediction_dataset(cfg.dataset_steps, cfg.dataset_size, cfg.dataset_seed)
    path = Path(args.dataset) if args.dataset else out_dir(args) / 'eval_dataset.csv'
    save_dataset(dataset, path)
    return 0

def cmd_interference(args: argparse.Namespace) -> int:
    cfg = experiment_config(args, measure_interference=True)
    sweep = run_sweep(cfg, prediction_dataset(args, cfg), workers(args))
    emit(best_tables(sweep), out_dir(args), args.plot)
    logger.info(f"Time-averaged interference at the best setting: "
                f"{np.mean([r.mean_interference for r in sweep.best.records]):.4f}")
    return 0

def cmd_net_size_sweep(args: argparse.Namespace) -> int:
    cfg = experiment_config(args)
    axis = SizeAxis(args.axis)
    rows, sweeps = network_size_sweep(cfg, axis, prediction_dataset(args, cfg), workers(args))
    prefix = f"{file_prefix(cfg)}_{axis.value}"
    tables = [net_size_table(f"{prefix}_net_size", rows, f"{cfg.label} by {axis.value}")]
    for size, sweep in zip(axis.sizes, sweeps):
        tables.append(interference_table(f"{prefix}_{size}_interference", sweep.best.records,
                                         f"{cfg.label}, {axis.value} = {size}"))
    emit(tables, out_dir(args), args.plot)
    return 0

def cmd_response_map(args: argparse.Namespace) -> int:
    cfg = experiment_config(args)
    setting = single_setting(args, cfg)
    net, featurizer = train_network(cfg, setting, cfg.base_seed, args.train_episodes)
    grid = args.grid or int(Config().evaluation.get('response_grid', 50))
    rmap = response_map(net, featurizer, grid)
    emit([response_map_table(f"{file_prefix(cfg)}_response_map", rmap)], out_dir(args))
    return 0

def cmd_ttest(args: argparse.Namespace) -> int:
    """Two-sample t-test over the per-run AUCs of two per-run CSV files"""
    aucs_a = [auc(r) for r in read_per_run(Path(args.a))]
    aucs_b = [auc(r) for r in read_per_run(Path(args.b))]
    result = safe_ttest(aucs_a, aucs_b, equal_var=not args.welch)
    logger.info(f"t = {result.t_statistic:g}, df = {result.degrees_of_freedom:g}, p = {result.p_value:g}")
    table = ttest_table(args.name, args.task or '', args.system or '',
                        Path(args.a).stem, Path(args.b).stem, result)
    emit([table], out_dir(args))
    return 0

def cmd_plot(args: argparse.Namespace) -> int:
    target = Path(args.out) if args.out else None
    for csv_path in args.tables:
        table = read_table(Path(csv_path))
        directory = target or Path(csv_path).parent
        directory.mkdir(parents=True, exist_ok=True)
        plot_table(table, directory / f"{table.name}.svg")
        logger.info(f"Plotted {csv_path}")
    return 0

COMMANDS = {
    'run': cmd_run,
    'sweep': cmd_sweep,
    'compare': cmd_compare,
    'eval-dataset': cmd_eval_dataset,
    'interference': cmd_interference,
    'net-size-sweep': cmd_net_size_sweep,
    'response-map': cmd_response_map,
    'ttest': cmd_ttest,
    'plot': cmd_plot,
}
