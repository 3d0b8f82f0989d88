import logging
import numpy as np
import pytest
import queue
import yaml
from logging.handlers import QueueHandler
from numpy.testing import assert_allclose, assert_array_equal

from main import main
from src.evaluation import rve
from src.harness    import (
    ExperimentConfig,
    Setting,
    SizeAxis,
    SweepResult,
    build_components,
    compare,
    compare_results,
    emit,
    load_experiment_config,
    network_size_sweep,
    read_per_run,
    read_table,
    run_learning_episode,
    run_single,
    run_sweep,
    safe_ttest,
    step_size_grid,
    sweep_settings
)
from src.harness.emit  import (
    learning_curve_table,
    per_run_table,
    sensitivity_table,
    setting_tables,
    sweep_summary_table
)
from src.harness.sweep import init_worker_logging, summarize_setting
from src.stats      import RunRecord
from src.utils      import ConfigError, HarnessError, Preprocessing, System, Task
from src.utils.constants import LOGGER_NAME

def _control(**kwargs):
    values = dict(task='mc_control', preprocessing='tilecode', system='sgd', hidden_layers=(8,),
                  step_size_grid=(2.0 ** -6,), episodes=3, runs=2, cutoff=60)
    values.update(kwargs)
    return ExperimentConfig(**values)

def _prediction(**kwargs):
    values = dict(task='mc_prediction', preprocessing='raw', system='sgd', hidden_layers=(8,),
                  step_size_grid=(2.0 ** -8,), episodes=2, runs=2)
    values.update(kwargs)
    return ExperimentConfig(**values)

def _fake_sweep(cfg, curves):
    """SweepResult over cfg's settings from given per-setting lists of per-episode curves"""
    settings = sweep_settings(cfg)
    results = [
        summarize_setting(setting, [RunRecord(run_seed=i, run_index=i, per_episode=c) for i, c in enumerate(runs)])
        for setting, runs in zip(settings, curves)
    ]
    return SweepResult(config=cfg, settings=results)

class TestProfiles:
    def test_desk_control_defaults(self, settings):
        cfg = load_experiment_config('mc_control', 'tilecode', 'sgd', 'desk')
        assert cfg.runs == 10
        assert cfg.episodes == 300
        assert cfg.cutoff == 1000
        assert cfg.hidden_layers == (50,)
        assert cfg.step_size_grid == tuple(2.0 ** -c for c in range(1, 18, 2))
        assert cfg.network.input_length == 128
        assert cfg.network.outputs == 3

    def test_paper_grids(self, settings):
        cfg = load_experiment_config('mc_prediction', 'raw', 'adam', 'paper')
        assert len(cfg.step_size_grid) == 16
        assert cfg.step_size_grid[0] == 2.0 ** -3
        assert cfg.beta1_grid == (0.9, 0.99, 0.999)
        assert cfg.beta2_grid == (0.9, 0.99, 0.999, 0.9999)
        assert cfg.cutoff is None
        assert len(sweep_settings(cfg)) == 16 * 12

    def test_acrobot_defaults(self, settings):
        cfg = load_experiment_config('acrobot_control', 'discretize', 'adam_er_tn', 'desk')
        assert cfg.cutoff == 500
        assert cfg.episodes == 200
        assert cfg.hidden_layers == (100,)
        assert cfg.network.input_length == 4 * 32
        assert cfg.target_sync_grid == (100,)

    def test_overrides(self, settings):
        cfg = load_experiment_config('mc_control', 'raw', 'sgd', 'desk', overrides={'runs': 3, 'episodes': None})
        assert cfg.runs == 3
        assert cfg.episodes == 300

    def test_document(self, settings, tmp_path):
        path = tmp_path / 'experiment.yaml'
        path.write_text(yaml.safe_dump({'task': 'acrobot_control', 'preprocessing': 'raw',
                                        'system': 'sgd', 'episodes': 7}))
        cfg = load_experiment_config(document=path)
        assert cfg.task is Task.ACROBOT_CONTROL
        assert cfg.episodes == 7
        # explicit arguments win over the document
        assert load_experiment_config(preprocessing='tilecode', document=path).preprocessing is Preprocessing.TILECODE

    def test_unknown_document_field(self, settings, tmp_path):
        path = tmp_path / 'experiment.yaml'
        path.write_text(yaml.safe_dump({'task': 'mc_control', 'learning_rate': 0.1}))
        with pytest.raises(ConfigError):
            load_experiment_config(document=path)

    def test_bad_profile(self, settings):
        with pytest.raises(ConfigError):
            load_experiment_config('mc_control', 'raw', 'sgd', 'weekend')

    def test_bad_name(self, settings):
        with pytest.raises(ConfigError):
            load_experiment_config('cart_pole', 'raw', 'sgd')

    def test_missing_system(self, settings):
        with pytest.raises(ConfigError):
            load_experiment_config('mc_control', 'raw')

class TestExperimentConfig:
    def test_default_grids(self):
        cfg = _control(step_size_grid=None)
        assert cfg.step_size_grid == step_size_grid(Task.MC_CONTROL)
        assert len(cfg.step_size_grid) == 18
        assert cfg.beta1_grid == () and cfg.target_sync_grid == ()

    def test_adam_grids(self):
        cfg = _control(system='adam_er_tn')
        assert len(sweep_settings(cfg)) == 12
        assert all(s.target_sync_period == 100 for s in sweep_settings(cfg))

    def test_settings_order(self):
        cfg = _control(step_size_grid=(0.1, 0.01), system='adam', beta1_grid=(0.9,), beta2_grid=(0.99, 0.999))
        assert [(s.step_size, s.beta2) for s in sweep_settings(cfg)] == [
            (0.1, 0.99), (0.1, 0.999), (0.01, 0.99), (0.01, 0.999)
        ]

    @pytest.mark.parametrize('kwargs', [
        {'beta1_grid': (0.9,), 'beta2_grid': (0.99,)},
        {'system': 'adam', 'beta1_grid': ()},
        {'target_sync_grid': (100,)},
        {'measure_interference': True},
        {'cutoff': None},
        {'episodes': 0},
        {'step_size_grid': (0.1, -0.1)},
    ])
    def test_invalid_control(self, kwargs):
        with pytest.raises(ConfigError):
            _control(**kwargs)

    def test_prediction_has_no_cutoff(self):
        with pytest.raises(ConfigError):
            _prediction(cutoff=100)

    def test_to_dict(self):
        document = _control().to_dict()
        assert document['task'] == 'mc_control'
        assert document['hidden_layers'] == [8]
        assert ExperimentConfig(**document).label == 'mc_control/tilecode/sgd'

class TestRunSingle:
    def test_deterministic(self):
        cfg = _control()
        setting = sweep_settings(cfg)[0]
        a = run_single(cfg, setting, 5)
        b = run_single(cfg, setting, 5)
        assert_array_equal(a.per_episode, b.per_episode)
        assert a.episodes == 3
        assert np.all((a.per_episode >= 1) & (a.per_episode <= 60))

    def test_seeds_differ(self, small_dataset):
        cfg = _prediction()
        setting = sweep_settings(cfg)[0]
        assert not np.array_equal(run_single(cfg, setting, 0, small_dataset).per_episode,
                                  run_single(cfg, setting, 1, small_dataset).per_episode)

    def test_prediction_records_capped_rve(self, small_dataset):
        cfg = _prediction(measure_interference=True)
        setting = sweep_settings(cfg)[0]
        record = run_single(cfg, setting, 3, small_dataset)
        parts = build_components(cfg, setting, 3)
        ceiling = cfg.rve_ceiling_multiplier * rve(parts.net, parts.featurizer, small_dataset)
        assert record.episodes == 2
        assert np.all(record.per_episode <= ceiling)
        assert [s.episode_index for s in record.snapshots] == [0, 1]
        assert all(-1.0 <= s.mean_pairwise_interference <= 1.0 for s in record.snapshots)

    def test_divergence_saturates(self, small_dataset):
        cfg = _prediction(hidden_layers=(), step_size_grid=(2.0 ** 40,), episodes=3)
        setting = sweep_settings(cfg)[0]
        record = run_single(cfg, setting, 0, small_dataset)
        parts = build_components(cfg, setting, 0)
        ceiling = cfg.rve_ceiling_multiplier * rve(parts.net, parts.featurizer, small_dataset)
        assert record.diverged
        assert_allclose(record.per_episode, ceiling)

    def test_learning_episode_stops_at_env_cutoff(self):
        cfg = _control(cutoff=7)
        parts = build_components(cfg, sweep_settings(cfg)[0], 0)
        assert parts.env.episode.cutoff_steps == 7
        assert run_learning_episode(parts.learner, parts.env, parts.env_rng) == 7
        assert parts.learner.steps == 7

class TestSweep:
    def test_single_setting(self):
        sweep = run_sweep(_control())
        assert len(sweep.settings) == 1
        assert sweep.best is sweep.settings[0]
        assert [r.run_seed for r in sweep.best.records] == [0, 1]

    def test_base_seed(self):
        sweep = run_sweep(_control(base_seed=40, runs=1))
        assert sweep.best.records[0].run_seed == 40

    def test_parallel_matches_serial(self):
        cfg = _control(step_size_grid=(2.0 ** -4, 2.0 ** -8))
        serial = run_sweep(cfg, workers=1)
        parallel = run_sweep(cfg, workers=2)
        for s, p in zip(serial.settings, parallel.settings):
            assert s.setting == p.setting
            for rs, rp in zip(s.records, p.records):
                assert_array_equal(rs.per_episode, rp.per_episode)
        assert [row for row in sweep_summary_table('x', serial).rows] == \
               [row for row in sweep_summary_table('x', parallel).rows]

    def test_worker_logging_forwards_to_queue(self):
        root = logging.getLogger()
        handlers, level = list(root.handlers), root.level
        records = queue.Queue()
        try:
            init_worker_logging(records, logging.INFO)
            assert len(root.handlers) == 1
            assert isinstance(root.handlers[0], QueueHandler)
            logging.getLogger(LOGGER_NAME).warning('run 3 finished')
            assert records.get_nowait().getMessage() == 'run 3 finished'
        finally:
            for handler in list(root.handlers):
                root.removeHandler(handler)
            for handler in handlers:
                root.addHandler(handler)
            root.setLevel(level)

    def test_bad_workers(self):
        with pytest.raises(ConfigError):
            run_sweep(_control(), workers=0)

    def test_best_is_minimum_mean_auc(self):
        cfg = _control(step_size_grid=(0.1, 0.01, 0.001))
        sweep = _fake_sweep(cfg, [[[30, 30, 30], [32, 30, 28]], [[10, 12, 11], [9, 9, 9]], [[50, 50, 50], [40, 40, 40]]])
        assert sweep.best_setting.step_size == 0.01
        assert sweep.best.mean_auc == pytest.approx(10.0)

    def test_dominated_setting_does_not_change_best(self):
        small = _fake_sweep(_control(step_size_grid=(0.1, 0.01)), [[[5, 5]], [[3, 4]]])
        large = _fake_sweep(_control(step_size_grid=(0.1, 0.01, 0.001)), [[[5, 5]], [[3, 4]], [[60, 60]]])
        assert small.best_setting == large.best_setting

    def test_sensitivity_slice(self):
        cfg = _control(system='adam', step_size_grid=(0.1, 0.01), beta1_grid=(0.9, 0.99), beta2_grid=(0.999,))
        sweep = _fake_sweep(cfg, [[[9, 9]], [[4, 4]], [[1, 1]], [[8, 8]]])
        assert sweep.best_setting == Setting(0.01, 0.9, 0.999)
        assert [s.setting.step_size for s in sweep.sensitivity()] == [0.01, 0.1]
        assert all(s.setting.beta1 == 0.9 for s in sweep.sensitivity())
        assert len(sensitivity_table('s', sweep).rows) == 2

class TestCompare:
    def test_identical_configs(self):
        comparison = compare(_control(runs=3), _control(runs=3))
        assert comparison.auc_test.t_statistic == 0.0
        assert comparison.auc_test.p_value == 1.0

    def test_swap_flips_sign(self):
        cfg = _control(runs=3)
        a = _fake_sweep(cfg, [[[10, 12], [11, 11], [9, 13]]])
        b = _fake_sweep(cfg, [[[20, 21], [18, 19], [22, 24]]])
        ab, ba = compare_results(a, b), compare_results(b, a)
        assert ab.auc_test.t_statistic < 0
        assert ab.auc_test.t_statistic == pytest.approx(-ba.auc_test.t_statistic)
        assert ab.auc_test.p_value == pytest.approx(ba.auc_test.p_value)
        assert ab.final_test is not None

    def test_constant_samples(self):
        assert safe_ttest([2.0, 2.0], [2.0, 2.0]).p_value == 1.0
        result = safe_ttest([1.0, 1.0], [3.0, 3.0])
        assert result.p_value == 0.0 and result.t_statistic == -np.inf

    def test_mismatched_runs(self):
        a = _fake_sweep(_control(runs=2), [[[1, 2], [2, 3]]])
        b = _fake_sweep(_control(runs=3), [[[1, 2], [2, 3], [3, 4]]])
        with pytest.raises(HarnessError):
            compare_results(a, b)

class TestNetworkSizeSweep:
    @pytest.mark.parametrize('axis, rows', [(SizeAxis.HIDDEN_UNITS, 5), (SizeAxis.HIDDEN_LAYERS, 4)])
    def test_rows(self, small_dataset, axis, rows):
        table, sweeps = network_size_sweep(_prediction(episodes=1), axis, small_dataset)
        assert len(table) == rows == len(sweeps)
        assert [r.size for r in table] == list(axis.sizes)
        assert all(-1.0 <= r.mean_pi <= 1.0 and r.runs == 2 for r in table)

    def test_needs_prediction(self):
        with pytest.raises(ConfigError):
            network_size_sweep(_control(), SizeAxis.HIDDEN_UNITS)

class TestEmit:
    def test_row_counts(self):
        records = [RunRecord(run_seed=i, run_index=i, per_episode=np.arange(5.0) + i) for i in range(3)]
        assert len(learning_curve_table('lc', records).rows) == 5
        assert len(per_run_table('pr', records).rows) == 15

    def test_idempotent_bytes(self, tmp_path):
        result = summarize_setting(Setting(0.1), [RunRecord(0, [1.0, 0.5, 1 / 3]), RunRecord(1, [2.0, 2.5, 0.1])])
        tables = setting_tables('x', result)
        first = [p.read_bytes() for p in emit(tables, tmp_path / 'a')]
        second = [p.read_bytes() for p in emit(tables, tmp_path / 'b')]
        assert first == second
        assert first[0].splitlines()[0] == b'episode,mean,stderr'

    def test_per_run_roundtrip(self, tmp_path):
        records = [RunRecord(run_seed=i, run_index=i, per_episode=[0.1 * i, 1 / 7, 3.0], diverged=i == 1)
                   for i in range(2)]
        path = emit([per_run_table('runs', records)], tmp_path)[0]
        loaded = read_per_run(path)
        assert [r.diverged for r in loaded] == [False, True]
        for original, copy in zip(records, loaded):
            assert_array_equal(copy.per_episode, original.per_episode)

    def test_plots(self, tmp_path):
        records = [RunRecord(run_seed=i, per_episode=np.linspace(100, 20, 30) + i) for i in range(2)]
        written = emit([learning_curve_table('curve', records, 'title')], tmp_path, plot=True)
        assert [p.suffix for p in written] == ['.csv', '.svg']
        assert written[1].read_text().lstrip().startswith('<?xml')

    def test_read_table_header(self, tmp_path):
        path = tmp_path / 'empty.csv'
        path.write_text('')
        with pytest.raises(HarnessError):
            read_table(path)

class TestCommandLine:
    ARGS = ['--log-level', 'WARNING', 'run', '--task', 'mc_control', '--preprocessing', 'tilecode',
            '--system', 'sgd', '--runs', '2', '--episodes', '2', '--step-size', '0.0625', '--workers', '1']

    def test_run_is_byte_identical(self, settings, tmp_path):
        assert main(self.ARGS + ['--out', str(tmp_path / 'a')]) == 0
        assert main(self.ARGS + ['--out', str(tmp_path / 'b')]) == 0
        name = 'mc_control_tilecode_sgd_per_run.csv'
        assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()
        assert len(read_per_run(tmp_path / 'a' / name)) == 2

    def test_ttest_and_plot(self, settings, tmp_path):
        main(self.ARGS + ['--out', str(tmp_path)])
        per_run = str(tmp_path / 'mc_control_tilecode_sgd_per_run.csv')
        curve = str(tmp_path / 'mc_control_tilecode_sgd_learning_curve.csv')
        assert main(['ttest', per_run, per_run, '--name', 'self', '--out', str(tmp_path)]) == 0
        table = read_table(tmp_path / 'self.csv')
        assert table.column('p').tolist() == [1.0]
        assert main(['plot', curve]) == 0
        assert (tmp_path / 'mc_control_tilecode_sgd_learning_curve.svg').exists()

    def test_lab_error_exit_code(self, settings, tmp_path, capsys):
        code = main(['run', '--task', 'mc_control', '--preprocessing', 'raw', '--system', 'sgd',
                     '--out', str(tmp_path)])
        assert code == 1
        assert 'step-size' in capsys.readouterr().err
