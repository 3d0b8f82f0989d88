import math
import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal
from scipy import integrate, special, stats as scipy_stats

from src.stats import (
    RunRecord,
    aggregate,
    auc,
    final_performance,
    mean_and_stderr,
    regularized_incomplete_beta,
    smooth,
    t_two_sided_p,
    two_sample_ttest
)
from src.utils import StatsError, ZeroVarianceError

class TestSmooth:
    def test_partial_window(self):
        assert_allclose(smooth([0.0, 10.0], 10), [0.0, 5.0])

    def test_window_one(self, rng):
        x = rng.normal(size=20)
        assert_array_equal(smooth(x, 1), x)

    def test_constant(self):
        assert_allclose(smooth(np.full(30, 4.2), 10), np.full(30, 4.2))

    def test_trailing_mean(self, rng):
        x = rng.normal(size=25)
        out = smooth(x, 5)
        for i in range(25):
            assert out[i] == pytest.approx(x[max(0, i - 4):i + 1].mean())

    def test_bad_window(self):
        with pytest.raises(StatsError):
            smooth([1.0], 0)

class TestAuc:
    def test_mean(self):
        assert auc([1.0, 2.0, 3.0]) == 2.0

    def test_constant(self):
        assert auc(RunRecord(run_seed=0, per_episode=np.full(50, -120.0))) == -120.0

    def test_final_performance(self):
        assert final_performance(np.arange(20.0), 10) == pytest.approx(14.5)

    def test_empty(self):
        with pytest.raises(StatsError):
            auc([])

class TestAggregate:
    def test_identical_runs(self):
        records = [RunRecord(run_seed=i, per_episode=[1.0, 2.0, 3.0]) for i in range(4)]
        mean, stderr = aggregate(records)
        assert_allclose(mean, [1.0, 2.0, 3.0])
        assert_array_equal(stderr, 0.0)

    def test_two_runs(self):
        mean, stderr = aggregate([RunRecord(0, [0.0, 1.0]), RunRecord(1, [2.0, 1.0])])
        assert mean[0] == pytest.approx(1.0)
        assert stderr[0] == pytest.approx(1.0)

    def test_single_run(self):
        _, stderr = aggregate([RunRecord(0, [5.0, 6.0])])
        assert_array_equal(stderr, 0.0)

    def test_length_mismatch(self):
        with pytest.raises(StatsError):
            aggregate([RunRecord(0, [1.0, 2.0]), RunRecord(1, [1.0])])

    def test_no_runs(self):
        with pytest.raises(StatsError):
            aggregate([])

    def test_stderr_matches_scipy(self, rng):
        matrix = rng.normal(size=(7, 12))
        _, stderr = mean_and_stderr(matrix)
        assert_allclose(stderr, scipy_stats.sem(matrix, axis=0), rtol=1e-12)

class TestIncompleteBeta:
    @pytest.mark.parametrize('x, a, b', [
        (0.3, 2.0, 0.5), (0.95, 2.0, 0.5), (0.5, 0.5, 0.5), (0.01, 9.0, 0.5),
        (0.7, 15.0, 0.5), (0.2, 1.0, 3.0), (0.999, 50.0, 0.5), (0.4, 4.5, 7.25)
    ])
    def test_matches_scipy(self, x, a, b):
        assert regularized_incomplete_beta(x, a, b) == pytest.approx(special.betainc(a, b, x), abs=1e-12)

    def test_matches_quadrature(self):
        a, b, x = 3.0, 0.5, 0.6
        integral, _ = integrate.quad(lambda u: u ** (a - 1) * (1 - u) ** (b - 1), 0.0, x)
        expected = integral / special.beta(a, b)
        assert regularized_incomplete_beta(x, a, b) == pytest.approx(expected, abs=1e-10)

    def test_random_points_match_quadrature(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            a, x = rng.uniform(1.0, 30.0), rng.uniform(0.01, 0.99)
            integral, _ = integrate.quad(lambda u: u ** (a - 1) * (1 - u) ** -0.5, 0.0, x, limit=200)
            assert abs(regularized_incomplete_beta(x, a, 0.5) - integral / special.beta(a, 0.5)) < 1e-7

    def test_endpoints(self):
        assert regularized_incomplete_beta(0.0, 2.0, 0.5) == 0.0
        assert regularized_incomplete_beta(1.0, 2.0, 0.5) == 1.0

    def test_out_of_range(self):
        with pytest.raises(StatsError):
            regularized_incomplete_beta(1.5, 2.0, 0.5)
        with pytest.raises(StatsError):
            regularized_incomplete_beta(0.5, 0.0, 0.5)

    @pytest.mark.parametrize('t, df', [(0.5, 4.0), (2.4494897, 4.0), (-3.0, 18.0), (10.0, 7.0)])
    def test_two_sided_p_matches_scipy(self, t, df):
        assert t_two_sided_p(t, df) == pytest.approx(2 * scipy_stats.t.sf(abs(t), df), abs=1e-12)

class TestTwoSampleTtest:
    def test_equal_samples(self):
        result = two_sample_ttest([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
        assert result.t_statistic == 0.0
        assert result.p_value == 1.0
        assert not result.significant_at_5pct

    def test_hand_computed(self):
        result = two_sample_ttest([0.0, 1.0, 2.0], [2.0, 3.0, 4.0])
        assert result.t_statistic == pytest.approx(-2.449, abs=1e-3)
        assert result.degrees_of_freedom == 4.0
        assert result.p_value == pytest.approx(0.0705, abs=1e-4)
        assert not result.significant_at_5pct

    def test_matches_scipy_pooled(self, rng):
        a, b = rng.normal(0.0, 1.0, size=10), rng.normal(0.8, 1.5, size=10)
        ours = two_sample_ttest(a, b)
        theirs = scipy_stats.ttest_ind(a, b, equal_var=True)
        assert ours.t_statistic == pytest.approx(theirs.statistic, rel=1e-10)
        assert ours.p_value == pytest.approx(theirs.pvalue, rel=1e-8)

    def test_matches_scipy_welch(self, rng):
        a, b = rng.normal(0.0, 1.0, size=8), rng.normal(0.5, 3.0, size=13)
        ours = two_sample_ttest(a, b, equal_var=False)
        theirs = scipy_stats.ttest_ind(a, b, equal_var=False)
        assert ours.t_statistic == pytest.approx(theirs.statistic, rel=1e-10)
        assert ours.p_value == pytest.approx(theirs.pvalue, rel=1e-8)

    def test_symmetry(self, rng):
        a, b = rng.normal(size=10), rng.normal(1.0, size=10)
        ab, ba = two_sample_ttest(a, b), two_sample_ttest(b, a)
        assert ab.t_statistic == pytest.approx(-ba.t_statistic)
        assert ab.p_value == pytest.approx(ba.p_value)

    def test_affine_invariance(self, rng):
        a, b = rng.normal(size=10), rng.normal(0.7, size=10)
        base = two_sample_ttest(a, b).p_value
        for c, d in ((3.0, -40.0), (-0.5, 7.0), (1e3, 1e4)):
            assert abs(two_sample_ttest(c * a + d, c * b + d).p_value - base) < 1e-9

    def test_larger_t_gives_smaller_p(self, rng):
        a = rng.normal(size=10)
        results = [two_sample_ttest(a, a + shift) for shift in (0.1, 0.3, 0.6, 1.0, 1.5, 2.5)]
        t = [abs(r.t_statistic) for r in results]
        p = [r.p_value for r in results]
        assert all(r.degrees_of_freedom == 18.0 for r in results)
        assert t == sorted(t)
        assert all(later < earlier for earlier, later in zip(p, p[1:]))

    @pytest.mark.parametrize('df', [2.0, 9.0, 58.0])
    def test_two_sided_p_decreases_in_t(self, df):
        p = [t_two_sided_p(t, df) for t in np.linspace(0.0, 8.0, 33)]
        assert p[0] == pytest.approx(1.0)
        assert all(later < earlier for earlier, later in zip(p, p[1:]))

    def test_separated_samples_significant(self):
        result = two_sample_ttest(np.arange(10.0), np.arange(10.0) + 20.0)
        assert result.significant_at_5pct
        assert result.t_statistic < 0

    def test_too_small(self):
        with pytest.raises(StatsError):
            two_sample_ttest([1.0], [1.0, 2.0])

    def test_constant_samples(self):
        with pytest.raises(ZeroVarianceError):
            two_sample_ttest([2.0, 2.0, 2.0], [5.0, 5.0])
