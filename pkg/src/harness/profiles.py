# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import yaml
import logging
from pathlib            import Path
from typing             import Any, Dict, Optional
from ..utils.config     import Config
from ..utils.constants  import LOGGER_NAME, Preprocessing, System, Task
from ..utils.exceptions import ConfigError
from .models            import ExperimentConfig, parse_enum, step_size_grid

logger = logging.getLogger(LOGGER_NAME)

PROFILES = ('paper', 'desk')

def load_document(path: Path) -> Dict[str, Any]:
    """Read an experiment document (YAML or JSON) mirroring ExperimentConfig"""
    try:
        with open(path, 'r') as f:
            document = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"Failed to load experiment document {path}: {str(e)}")

    if not isinstance(document, dict):
        raise ConfigError(f"Experiment document {path} must hold a mapping")
    unknown = set(document) - set(ExperimentConfig.field_names())
    if unknown:
        raise ConfigError(f"Unknown experiment fields in {path}: {', '.join(sorted(unknown))}")
    return document

def profile_defaults(task: Task, system: System, profile: str) -> Dict[str, Any]:
    """
    ExperimentConfig fields for a task under a named profile

    Raises:
        ConfigError: If the profile or task is missing from the settings
    """
    if profile not in PROFILES:
        raise ConfigError(f"Invalid profile: {profile}. Must be one of: {', '.join(PROFILES)}")

    config = Config()
    try:
        prof = config.profiles[profile]
        task_cfg = config.tasks[task.value]
        learner = config.learner
        tiles = config.tile_coding
        evaluation = config.evaluation
    except KeyError as e:
        raise ConfigError(f"Settings have no entry for {str(e)}")

    try:
        span = task_cfg.get('step_size_exponents')
        exponents = (int(span['first']), int(span['last'])) if span else None
        values: Dict[str, Any] = {
            'hidden_layers': tuple(task_cfg['hidden_layers']),
            'step_size_grid': step_size_grid(task, prof['exponent_stride'], exponents),
            'beta1_grid': tuple(prof['beta1_grid']) if system.uses_adam else (),
            'beta2_grid': tuple(prof['beta2_grid']) if system.uses_adam else (),
            'target_sync_grid': tuple(prof['target_sync_grid']) if system.uses_target else (),
            'episodes': prof['episodes'][task.value],
            'runs': prof['runs'],
            'cutoff': task_cfg['cutoff'],
            'bins': task_cfg['bins'],
            'tile_capacity': task_cfg['tile_capacity'],
            'num_tilings': tiles['num_tilings'],
            'tiles_per_dim': tiles['tiles_per_dim'],
            'epsilon': learner['epsilon'],
            'gamma': learner['gamma'],
            'batch_size': learner['batch_size'],
            'buffer_capacity': learner['buffer_capacity'],
            'adam_epsilon': learner['adam_epsilon'],
            'dataset_steps': prof['dataset_steps'],
            'dataset_size': prof['dataset_size'],
            'rve_ceiling_multiplier': evaluation['rve_ceiling_multiplier'],
            'smoothing_window': evaluation['smoothing_window'],
            'equal_var': evaluation['equal_var'],
        }
    except KeyError as e:
        raise ConfigError(f"Profile '{profile}' or task '{task.value}' is missing {str(e)}")
    return values

def profile_workers(profile: str) -> int:
    return int(Config().profiles.get(profile, {}).get('workers', 1))

def load_experiment_config(task: Any = None,
                           preprocessing: Any = None,
                           system: Any = None,
                           profile: str = 'desk',
                           document: Optional[Path] = None,
                           overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    Assemble an ExperimentConfig: profile defaults, then the experiment
    document, then explicit arguments and overrides (None values are ignored)

    Raises:
        ConfigError: If task, preprocessing or system is given nowhere
    """
    values: Dict[str, Any] = {}
    if document is not None:
        values.update(load_document(document))
    explicit = dict(overrides or {}, task=task, preprocessing=preprocessing, system=system)
    values.update({key: value for key, value in explicit.items() if value is not None})

    missing = [name for name in ('task', 'preprocessing', 'system') if name not in values]
    if missing:
        raise ConfigError(f"Experiment needs {', '.join(missing)}")
    task = parse_enum(Task, values.pop('task'), 'task')
    preprocessing = parse_enum(Preprocessing, values.pop('preprocessing'), 'preprocessing')
    system = parse_enum(System, values.pop('system'), 'system')

    merged = profile_defaults(task, system, profile)
    merged.update(values)
    cfg = ExperimentConfig(task=task, preprocessing=preprocessing, system=system, **merged)
    logger.info(f"Loaded {cfg.label} ({profile} profile): {cfg.runs} runs x {cfg.episodes} episodes, "
                f"{len(cfg.step_size_grid)} step-sizes")
    return cfg
