"""
Desk-scale reproductions of the headline results

Deselected by default; run with ``pytest -m slow``. Each test sweeps the
desk profile grid and takes minutes.
"""
import numpy as np
import pytest
from dataclasses import replace

from src.evaluation import default_prediction_dataset
from src.harness    import (
    compare,
    load_experiment_config,
    run_single,
    run_sweep,
    safe_ttest,
    sweep_settings
)
from src.stats      import final_performance

pytestmark = pytest.mark.slow

@pytest.fixture(scope='module')
def desk_dataset():
    return default_prediction_dataset(100_000, 500, 12345)

def _desk(task, preprocessing, system='sgd', **overrides):
    return load_experiment_config(task, preprocessing, system, 'desk', overrides=overrides)

@pytest.mark.parametrize('preprocessing', ['tilecode', 'discretize'])
def test_coarse_coding_learns_control_faster(settings, preprocessing):
    comparison = compare(_desk('mc_control', preprocessing), _desk('mc_control', 'raw'), workers=4)
    assert comparison.sweep_a.best.mean_auc < comparison.sweep_b.best.mean_auc
    assert comparison.auc_test.p_value < 0.05

def test_tile_coding_lowers_prediction_error_and_interference(settings, desk_dataset):
    tile = run_sweep(_desk('mc_prediction', 'tilecode', measure_interference=True), desk_dataset, workers=4)
    raw = run_sweep(_desk('mc_prediction', 'raw', measure_interference=True), desk_dataset, workers=4)
    window = tile.config.smoothing_window
    tile_final = [final_performance(r, window) for r in tile.best.records]
    raw_final = [final_performance(r, window) for r in raw.best.records]
    result = safe_ttest(tile_final, raw_final)
    assert np.mean(tile_final) < np.mean(raw_final)
    assert result.p_value < 0.05

    tile_pi = np.mean([r.mean_interference for r in tile.best.records])
    raw_pi = np.mean([r.mean_interference for r in raw.best.records])
    assert tile_pi < raw_pi

def test_tile_coding_dominates_step_size_sensitivity(settings, desk_dataset):
    tile = run_sweep(_desk('mc_prediction', 'tilecode'), desk_dataset, workers=4)
    raw = run_sweep(_desk('mc_prediction', 'raw'), desk_dataset, workers=4)
    compared = 0
    for t, r in zip(tile.sensitivity(), raw.sensitivity()):
        assert t.setting.step_size == r.setting.step_size
        if t.diverged_runs or r.diverged_runs:
            continue
        assert t.mean_auc <= r.mean_auc
        compared += 1
    assert compared > 0

def test_tile_coded_control_improves_within_a_run(settings):
    cfg = replace(_desk('mc_control', 'tilecode'), episodes=200)
    setting = sweep_settings(replace(cfg, step_size_grid=(2.0 ** -7,)))[0]
    steps = run_single(cfg, setting, 0).per_episode
    assert steps[-50:].mean() < steps[:50].mean()

def test_interference_sweep_orders_tile_below_raw(settings, desk_dataset):
    cfgs = {p: _desk('mc_prediction', p, hidden_layers=(25,), measure_interference=True)
            for p in ('tilecode', 'raw')}
    pi = {p: np.mean([r.mean_interference for r in run_sweep(cfg, desk_dataset, workers=4).best.records])
          for p, cfg in cfgs.items()}
    assert pi['tilecode'] <= pi['raw']
