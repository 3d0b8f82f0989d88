# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import csv
import logging
import numpy as np
from dataclasses        import dataclass, field
from pathlib            import Path
from typing             import Any, Dict, List, Optional, Sequence, Tuple
from ..network          import ResponseMap
from ..stats            import RunRecord, TTestResult, aggregate, mean_and_stderr
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import HarnessError
from .models            import Comparison, SettingResult, SizeRow, SweepResult
from .plots             import plot_table

logger = logging.getLogger(LOGGER_NAME)

LEARNING_CURVE_COLUMNS = ('episode', 'mean', 'stderr')
SENSITIVITY_COLUMNS = ('step_size', 'mean_auc', 'stderr')
INTERFERENCE_COLUMNS = ('episode', 'mean_pi', 'stderr')
NET_SIZE_COLUMNS = ('size', 'mean_pi', 'sd')
PER_RUN_COLUMNS = ('run', 'episode', 'value', 'diverged')
TTEST_COLUMNS = ('task', 'system', 'preprocessing_a', 'preprocessing_b', 't', 'df', 'p', 'significant')
SWEEP_SUMMARY_COLUMNS = ('step_size', 'beta1', 'beta2', 'target_sync', 'mean_auc', 'stderr', 'diverged_runs')
PAIRED_CURVE_COLUMNS = ('episode', 'mean_a', 'stderr_a', 'mean_b', 'stderr_b')
RESPONSE_MAP_COLUMNS = ('unit', 'x0', 'x1', 'activation')

# Tables with a line-plot form, keyed by their columns
PLOT_KINDS = {
    LEARNING_CURVE_COLUMNS: 'learning_curve',
    SENSITIVITY_COLUMNS: 'sensitivity',
    INTERFERENCE_COLUMNS: 'interference',
    NET_SIZE_COLUMNS: 'net_size',
    PAIRED_CURVE_COLUMNS: 'paired_curves',
}

@dataclass
class Table:
    """One CSV artifact"""
    name: str
    columns: Tuple[str, ...]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)
    title: str = ''

    def __post_init__(self):
        self.columns = tuple(self.columns)
        for row in self.rows:
            if len(row) != len(self.columns):
                raise HarnessError(f"Table {self.name}: row {row} does not match columns {self.columns}")

    @property
    def kind(self) -> Optional[str]:
        return PLOT_KINDS.get(self.columns)

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([float(row[i]) for row in self.rows])

def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)

def learning_curve_table(name: str, records: Sequence[RunRecord], title: str = '') -> Table:
    mean, stderr = aggregate(records)
    rows = [(e + 1, mean[e], stderr[e]) for e in range(mean.shape[0])]
    return Table(name, LEARNING_CURVE_COLUMNS, rows, title)

def sensitivity_table(name: str, sweep: SweepResult, title: str = '') -> Table:
    """One row per step-size at the best setting's other parameters"""
    rows = [(s.setting.step_size, s.mean_auc, s.stderr) for s in sweep.sensitivity()]
    return Table(name, SENSITIVITY_COLUMNS, rows, title)

def interference_table(name: str, records: Sequence[RunRecord], title: str = '') -> Table:
    """
    Mean and standard error of the snapshot interference at every
    scheduled episode, over the runs that reached it
    """
    by_episode: Dict[int, List[float]] = {}
    for record in records:
        for snap in record.snapshots:
            by_episode.setdefault(snap.episode_index, []).append(snap.mean_pairwise_interference)
    rows = []
    for episode in sorted(by_episode):
        mean, stderr = mean_and_stderr(np.array(by_episode[episode])[:, None])
        rows.append((episode, mean[0], stderr[0]))
    return Table(name, INTERFERENCE_COLUMNS, rows, title)

def net_size_table(name: str, size_rows: Sequence[SizeRow], title: str = '') -> Table:
    return Table(name, NET_SIZE_COLUMNS, [(r.size, r.mean_pi, r.sd) for r in size_rows], title)

def per_run_table(name: str, records: Sequence[RunRecord]) -> Table:
    rows = [
        (r.run_index, e + 1, value, r.diverged)
        for r in sorted(records, key=lambda r: r.run_index)
        for e, value in enumerate(r.per_episode)
    ]
    return Table(name, PER_RUN_COLUMNS, rows)

def ttest_table(name: str,
                task: str,
                system: str,
                preprocessing_a: str,
                preprocessing_b: str,
                result: TTestResult) -> Table:
    row = (task, system, preprocessing_a, preprocessing_b, result.t_statistic,
           result.degrees_of_freedom, result.p_value, result.significant_at_5pct)
    return Table(name, TTEST_COLUMNS, [row])

def sweep_summary_table(name: str, sweep: SweepResult) -> Table:
    rows = [
        (s.setting.step_size, s.setting.beta1, s.setting.beta2, s.setting.target_sync_period,
         s.mean_auc, s.stderr, s.diverged_runs)
        for s in sweep.settings
    ]
    return Table(name, SWEEP_SUMMARY_COLUMNS, rows)

def paired_curves_table(name: str, comparison: Comparison, title: str = '') -> Table:
    """Learning curves of both compared best settings side by side"""
    mean_a, stderr_a = aggregate(comparison.sweep_a.best.records)
    mean_b, stderr_b = aggregate(comparison.sweep_b.best.records)
    rows = [(e + 1, mean_a[e], stderr_a[e], mean_b[e], stderr_b[e]) for e in range(mean_a.shape[0])]
    return Table(name, PAIRED_CURVE_COLUMNS, rows, title)

def response_map_table(name: str, rmap: ResponseMap) -> Table:
    return Table(name, RESPONSE_MAP_COLUMNS, list(rmap.rows()))

def setting_tables(prefix: str, result: SettingResult, title: str = '') -> List[Table]:
    """Learning curve plus per-run raw values of one setting"""
    return [
        learning_curve_table(f"{prefix}_learning_curve", result.records, title),
        per_run_table(f"{prefix}_per_run", result.records),
    ]

def write_table(table: Table, path: Path) -> None:
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_cell(v) for v in row])

def emit(artifacts: Sequence[Table], out_dir: Path, plot: bool = False) -> List[Path]:
    """
    Write every table as <name>.csv (and <name>.svg when plot is set and
    the table has a line-plot form)

    Returns:
        Written paths in artifact order

    Raises:
        HarnessError: If the output directory or a file cannot be written
    """
    written: List[Path] = []
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for table in artifacts:
            path = out_dir / f"{table.name}.csv"
            write_table(table, path)
            written.append(path)
            if plot and table.kind is not None:
                svg = out_dir / f"{table.name}.svg"
                plot_table(table, svg)
                written.append(svg)
    except OSError as e:
        error_msg = f"Failed to write results to {out_dir}: {str(e)}"
        logger.error(error_msg)
        raise HarnessError(error_msg)

    logger.info(f"Wrote {len(written)} file(s) to {out_dir}")
    return written

def read_table(path: Path) -> Table:
    """
    Read a CSV written by emit; numeric cells stay strings until
    Table.column converts them

    Raises:
        HarnessError: If the file cannot be read or has no header
    """
    try:
        with open(path, 'r', newline='') as f:
            reader = csv.reader(f)
            header = next(reader, None)
            rows = [tuple(row) for row in reader]
    except OSError as e:
        error_msg = f"Failed to read {path}: {str(e)}"
        logger.error(error_msg)
        raise HarnessError(error_msg)
    if not header:
        raise HarnessError(f"{path} has no header row")
    return Table(Path(path).stem, tuple(header), rows, Path(path).stem)

def read_per_run(path: Path) -> List[RunRecord]:
    """
    Rebuild run records from a per-run raw CSV

    Raises:
        HarnessError: If the file is not a per-run table
    """
    table = read_table(path)
    if table.columns != PER_RUN_COLUMNS:
        raise HarnessError(f"{path} is not a per-run table (columns {', '.join(table.columns)})")

    runs: Dict[int, List[Tuple[int, float]]] = {}
    diverged: Dict[int, bool] = {}
    try:
        for run, episode, value, flag in table.rows:
            runs.setdefault(int(run), []).append((int(episode), float(value)))
            diverged[int(run)] = flag == 'true'
    except ValueError as e:
        raise HarnessError(f"Malformed row in {path}: {str(e)}")

    return [
        RunRecord(run_seed=run, run_index=run, diverged=diverged[run],
                  per_episode=[value for _, value in sorted(runs[run])])
        for run in sorted(runs)
    ]
