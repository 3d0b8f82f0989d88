from .models   import (
    ExperimentConfig,
    Setting,
    SettingResult,
    SweepResult,
    Comparison,
    SizeAxis,
    SizeRow,
    step_size_grid
)
from .profiles import load_experiment_config, load_document, profile_defaults
from .runner   import build_components, run_learning_episode, run_single, run_streams, train_network
from .sweep    import (
    sweep_settings,
    run_sweep,
    compare,
    compare_results,
    safe_ttest,
    network_size_sweep
)
from .emit     import Table, emit, read_table, read_per_run
from .commands import COMMANDS

__all__ = [
    'ExperimentConfig',
    'Setting',
    'SettingResult',
    'SweepResult',
    'Comparison',
    'SizeAxis',
    'SizeRow',
    'step_size_grid',
    'load_experiment_config',
    'load_document',
    'profile_defaults',
    'build_components',
    'run_learning_episode',
    'run_single',
    'run_streams',
    'train_network',
    'sweep_settings',
    'run_sweep',
    'compare',
    'compare_results',
    'safe_ttest',
    'network_size_sweep',
    'Table',
    'emit',
    'read_table',
    'read_per_run',
    'COMMANDS'
]
