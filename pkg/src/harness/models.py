# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import numpy as np
from dataclasses        import dataclass, field, fields
from enum               import Enum
from typing             import Any, Dict, List, Optional, Tuple
from ..network          import NetworkSpec
from ..stats            import RunRecord, TTestResult
from ..utils.constants  import NUM_ACTIONS, Preprocessing, System, Task
from ..utils.exceptions import ConfigError

TASK_DIMS = {Task.MC_PREDICTION: 2, Task.MC_CONTROL: 2, Task.ACROBOT_CONTROL: 4}
TASK_EXPONENTS = {Task.MC_PREDICTION: (3, 18), Task.MC_CONTROL: (1, 18), Task.ACROBOT_CONTROL: (5, 18)}
BETA1_GRID = (0.9, 0.99, 0.999)
BETA2_GRID = (0.9, 0.99, 0.999, 0.9999)

def step_size_grid(task: Task,
                   stride: int = 1,
                   exponents: Optional[Tuple[int, int]] = None) -> Tuple[float, ...]:
    """Step-sizes 2^-c over the task's exponent range, optionally thinned"""
    if stride < 1:
        raise ConfigError(f"Exponent stride must be positive, got {stride}")
    first, last = exponents or TASK_EXPONENTS[task]
    return tuple(2.0 ** -c for c in range(first, last + 1, stride))

def parse_enum(enum_cls, value, name: str):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(value)
    except ValueError:
        valid = ', '.join(e.value for e in enum_cls)
        raise ConfigError(f"Invalid {name}: {value}. Must be one of: {valid}")

class SizeAxis(Enum):
    """Network-size sweep axes"""
    HIDDEN_UNITS = 'hidden_units'
    HIDDEN_LAYERS = 'hidden_layers'

    @property
    def sizes(self) -> Tuple[int, ...]:
        return (5, 10, 25, 50, 75) if self is SizeAxis.HIDDEN_UNITS else (1, 2, 3, 4)

    def hidden_layers(self, size: int) -> Tuple[int, ...]:
        return (size,) if self is SizeAxis.HIDDEN_UNITS else (25,) * size

@dataclass
class ExperimentConfig:
    """
    One (task, preprocessing, system) experiment and its parameter grids

    Grids left as None take the standard grids. Beta grids exist only
    for Adam systems and the sync-period grid only with a target network.
    """
    task: Task
    preprocessing: Preprocessing
    system: System
    hidden_layers: Tuple[int, ...] = (50,)
    step_size_grid: Optional[Tuple[float, ...]] = None
    beta1_grid: Optional[Tuple[float, ...]] = None
    beta2_grid: Optional[Tuple[float, ...]] = None
    target_sync_grid: Optional[Tuple[int, ...]] = None
    episodes: int = 500
    runs: int = 30
    base_seed: int = 0
    measure_interference: bool = False
    cutoff: Optional[int] = None
    bins: int = 20
    tile_capacity: int = 128
    num_tilings: int = 8
    tiles_per_dim: int = 4
    epsilon: float = 0.1
    gamma: float = 1.0
    batch_size: int = 32
    buffer_capacity: int = 2000
    adam_epsilon: float = 1e-8
    dataset_steps: int = 100_000
    dataset_size: int = 500
    dataset_seed: int = 12345
    rve_ceiling_multiplier: float = 10.0
    smoothing_window: int = 10
    equal_var: bool = True

    def __post_init__(self):
        """
        Normalize enums and grids, then validate

        Raises:
            ConfigError: If a field is out of range or a grid does not fit the system
        """
        self.task = parse_enum(Task, self.task, 'task')
        self.preprocessing = parse_enum(Preprocessing, self.preprocessing, 'preprocessing')
        self.system = parse_enum(System, self.system, 'system')
        self.hidden_layers = tuple(int(w) for w in self.hidden_layers)

        if self.step_size_grid is None:
            self.step_size_grid = step_size_grid(self.task)
        if self.beta1_grid is None:
            self.beta1_grid = BETA1_GRID if self.system.uses_adam else ()
        if self.beta2_grid is None:
            self.beta2_grid = BETA2_GRID if self.system.uses_adam else ()
        if self.target_sync_grid is None:
            self.target_sync_grid = (100,) if self.system.uses_target else ()
        self.step_size_grid = tuple(float(a) for a in self.step_size_grid)
        self.beta1_grid = tuple(float(b) for b in self.beta1_grid)
        self.beta2_grid = tuple(float(b) for b in self.beta2_grid)
        self.target_sync_grid = tuple(int(p) for p in self.target_sync_grid)

        if not self.step_size_grid or any(a <= 0 for a in self.step_size_grid):
            raise ConfigError(f"step_size_grid must hold positive values, got {self.step_size_grid}")
        uses_adam = self.system.uses_adam
        if uses_adam != bool(self.beta1_grid) or uses_adam != bool(self.beta2_grid):
            raise ConfigError(
                f"Beta grids must be given exactly for Adam systems ({self.system.value}: "
                f"beta1 {self.beta1_grid}, beta2 {self.beta2_grid})"
            )
        if self.system.uses_target != bool(self.target_sync_grid):
            raise ConfigError(
                f"target_sync_grid must be given exactly for target-network systems, got {self.target_sync_grid}"
            )
        if self.measure_interference and not self.task.is_prediction:
            raise ConfigError("Interference is only measured on the prediction task")
        if self.task.is_prediction and self.cutoff is not None:
            raise ConfigError("Prediction episodes run to termination; cutoff must be null")
        if not self.task.is_prediction and (self.cutoff is None or self.cutoff < 1):
            raise ConfigError(f"Control tasks need a positive cutoff, got {self.cutoff}")

        for name in ('episodes', 'runs', 'bins', 'tile_capacity', 'num_tilings', 'tiles_per_dim',
                     'batch_size', 'buffer_capacity', 'dataset_steps', 'dataset_size', 'smoothing_window'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value}")
        if self.dataset_size > self.dataset_steps:
            raise ConfigError(f"dataset_size ({self.dataset_size}) exceeds dataset_steps ({self.dataset_steps})")
        if self.rve_ceiling_multiplier <= 1.0:
            raise ConfigError(f"rve_ceiling_multiplier must exceed 1, got {self.rve_ceiling_multiplier}")

    @property
    def dims(self) -> int:
        return TASK_DIMS[self.task]

    @property
    def input_length(self) -> int:
        if self.preprocessing is Preprocessing.RAW:
            return self.dims
        if self.preprocessing is Preprocessing.DISCRETIZE:
            return self.dims * self.bins
        return self.tile_capacity

    @property
    def network(self) -> NetworkSpec:
        outputs = 1 if self.task.is_prediction else NUM_ACTIONS
        return NetworkSpec(input_length=self.input_length, hidden_layers=self.hidden_layers, outputs=outputs)

    @property
    def label(self) -> str:
        return f"{self.task.value}/{self.preprocessing.value}/{self.system.value}"

    def to_dict(self) -> Dict[str, Any]:
        """Plain (YAML/JSON friendly) mapping of every field"""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = value.value if isinstance(value, Enum) else (list(value) if isinstance(value, tuple) else value)
        return out

    @classmethod
    def field_names(cls) -> List[str]:
        return [f.name for f in fields(cls)]

@dataclass(frozen=True)
class Setting:
    """One point of a parameter grid"""
    step_size: float
    beta1: Optional[float] = None
    beta2: Optional[float] = None
    target_sync_period: Optional[int] = None

    @property
    def fixed_part(self) -> Tuple[Optional[float], Optional[float], Optional[int]]:
        """Everything except the step-size"""
        return self.beta1, self.beta2, self.target_sync_period

    @property
    def label(self) -> str:
        parts = [f"alpha=2^{np.log2(self.step_size):g}"]
        if self.beta1 is not None:
            parts.append(f"beta1={self.beta1:g}, beta2={self.beta2:g}")
        if self.target_sync_period is not None:
            parts.append(f"sync={self.target_sync_period}")
        return ', '.join(parts)

@dataclass
class SettingResult:
    """All runs of one setting"""
    setting: Setting
    records: List[RunRecord]
    aucs: np.ndarray
    mean_auc: float
    stderr: float

    @property
    def diverged_runs(self) -> int:
        return sum(r.diverged for r in self.records)

@dataclass
class SweepResult:
    """Every setting of a sweep, canonically ordered by grid position"""
    config: ExperimentConfig
    settings: List[SettingResult] = field(default_factory=list)

    @property
    def best(self) -> SettingResult:
        """Setting with minimum mean AUC (first in grid order on ties)"""
        return min(self.settings, key=lambda s: s.mean_auc)

    @property
    def best_setting(self) -> Setting:
        return self.best.setting

    def sensitivity(self) -> List[SettingResult]:
        """Step-size slice with every other parameter held at the best setting's values"""
        fixed = self.best_setting.fixed_part
        return sorted((s for s in self.settings if s.setting.fixed_part == fixed),
                      key=lambda s: s.setting.step_size)

@dataclass
class Comparison:
    """Two sweeps compared at their best settings"""
    sweep_a: SweepResult
    sweep_b: SweepResult
    auc_test: TTestResult
    final_test: Optional[TTestResult] = None

@dataclass(frozen=True)
class SizeRow:
    """Interference summary for one network size"""
    size: int
    mean_pi: float
    sd: float
    runs: int
