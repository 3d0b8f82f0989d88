# vim:tabstop=4:softtabstop=4:shiftwidth=4:textwidth=79:expandtab:autoindent:smartindent:fileformat=unix:

import logging
import matplotlib
matplotlib.use('Agg')
matplotlib.rcParams.update({
    'font.family': 'DejaVu Sans',
    'axes.unicode_minus': False,
    'svg.hashsalt': 'interference-lab',
})
import matplotlib.pyplot as plt
import numpy as np
from pathlib            import Path
from ..stats            import smooth
from ..utils.constants  import LOGGER_NAME
from ..utils.exceptions import HarnessError

logger = logging.getLogger(LOGGER_NAME)

SMOOTHING_WINDOW = 10

def _band(ax, x: np.ndarray, mean: np.ndarray, stderr: np.ndarray, label: str) -> None:
    ax.plot(x, mean, label=label)
    ax.fill_between(x, mean - stderr, mean + stderr, alpha=0.25)

def plot_table(table, path: Path, window: int = SMOOTHING_WINDOW) -> None:
    """
    Line plot of a learning-curve, sensitivity, interference, net-size or
    paired-curve table as SVG

    Learning curves are smoothed with a trailing window before plotting;
    every other kind is drawn as tabulated. Output is byte-stable for
    identical tables.

    Raises:
        HarnessError: If the table has no line-plot form
    """
    kind = table.kind
    if kind is None:
        raise HarnessError(f"Table {table.name} ({', '.join(table.columns)}) has no plot form")

    fig, ax = plt.subplots(figsize=(6.4, 4.0), constrained_layout=True)
    try:
        if kind == 'learning_curve':
            _band(ax, table.column('episode'), smooth(table.column('mean'), window),
                  smooth(table.column('stderr'), window), table.name)
            ax.set_xlabel('Episode')
            ax.set_ylabel('Value')
        elif kind == 'paired_curves':
            x = table.column('episode')
            for side in ('a', 'b'):
                _band(ax, x, smooth(table.column(f'mean_{side}'), window),
                      smooth(table.column(f'stderr_{side}'), window), side)
            ax.set_xlabel('Episode')
            ax.set_ylabel('Value')
            ax.legend(loc='best', fontsize=8)
        elif kind == 'sensitivity':
            _band(ax, table.column('step_size'), table.column('mean_auc'), table.column('stderr'), table.name)
            ax.set_xscale('log', base=2)
            ax.set_xlabel('Step-size')
            ax.set_ylabel('AUC')
        elif kind == 'interference':
            _band(ax, table.column('episode'), table.column('mean_pi'), table.column('stderr'), table.name)
            ax.set_xlabel('Episode')
            ax.set_ylabel('Pairwise interference')
        else:
            ax.errorbar(table.column('size'), table.column('mean_pi'), yerr=table.column('sd'), marker='o')
            ax.set_xlabel('Size')
            ax.set_ylabel('Pairwise interference')
        ax.set_title(table.title or table.name)
        ax.grid(True, alpha=0.3)
        fig.savefig(path, format='svg', metadata={'Date': None})
    finally:
        plt.close(fig)
    logger.debug(f"Plotted {table.name} to {path}")
