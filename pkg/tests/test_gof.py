import math

import numpy as np
import pytest
from scipy.stats import ks_2samp, kstest

from iwsurv import gof
from iwsurv.distributions import (IWParams, Model, PolyHazardCoeffs,
                                  iw_quantile_vec, iw_sample)
from iwsurv.errors import DomainError, StudyError
from iwsurv.estimation import Sample, fit_iw_ml, fit_ll_ml
from iwsurv.kernels import fit_iw, ad_iw
from iwsurv.rng import DOMAIN_STUDY, substream

EQ19 = PolyHazardCoeffs(0.5305, -0.03597, 0.0008995, t_max=20.0)


class TestADStatistic:
    """The published statistics pin down the computational form."""

    def test_a_vs_parent(self, fixture_a):
        stat = gof.ad_for_model(fixture_a, Model.IW, IWParams(1, 1.1))
        assert stat == pytest.approx(0.2927, abs=0.0005)

    def test_a_vs_fitted(self, fixture_a):
        stat = gof.ad_for_model(fixture_a, Model.IW, fit_iw_ml(fixture_a))
        assert stat == pytest.approx(0.2740, abs=0.001)

    def test_a_vs_benchmark_poly(self, fixture_a):
        assert gof.ad_for_model(fixture_a, Model.POLY, EQ19) == pytest.approx(
            1.152, abs=0.005)

    def test_b_vs_parent(self, fixture_b):
        stat = gof.ad_for_model(fixture_b, Model.IW, IWParams(1, 4.1))
        assert stat == pytest.approx(1.460, abs=0.005)

    def test_b_vs_fits(self, fixture_b):
        assert gof.ad_for_model(fixture_b, Model.IW, fit_iw_ml(fixture_b)) == \
            pytest.approx(0.5994, abs=0.005)
        assert gof.ad_for_model(fixture_b, Model.LL, fit_ll_ml(fixture_b)) == \
            pytest.approx(0.3587, abs=0.001)

    def test_c_vs_fits(self, fixture_c):
        assert gof.ad_for_model(fixture_c, Model.IW, fit_iw_ml(fixture_c)) == \
            pytest.approx(0.312, abs=0.005)
        assert gof.ad_for_model(fixture_c, Model.LL, fit_ll_ml(fixture_c)) == \
            pytest.approx(0.201, abs=0.005)

    def test_time_rescaling_invariance(self, fixture_a):
        p = IWParams(1, 1.1)
        base = gof.ad_statistic(fixture_a.values,
                                lambda t: np.exp(-(p.a * t) ** (-p.b)))
        for c in (0.5, 8.0):
            scaled = gof.ad_statistic(
                c * fixture_a.values,
                lambda t: np.exp(-(p.a * (t / c)) ** (-p.b)))
            assert scaled == base  # exact: identical Cdf values enter the sum

    def test_scalar_cdf_callable(self, fixture_c):
        p = IWParams(1, 1)
        vec = gof.ad_statistic(fixture_c.values,
                               lambda t: np.exp(-(t ** -1.0)))
        scalar = gof.ad_statistic(fixture_c.values,
                                  lambda t: math.exp(-(t ** -1.0)))
        assert scalar == pytest.approx(vec, rel=1e-12)

    def test_clamping_warns(self):
        s = Sample.from_values([1.0, 2.0, 3.0])
        with pytest.warns(UserWarning):
            stat = gof.ad_statistic(s, lambda t: np.where(t > 2.5, 1.0, 0.5))
        assert math.isfinite(stat)

    def test_matches_kernel_path(self, fixture_b, backend):
        p = fit_iw_ml(fixture_b)
        generic = gof.ad_statistic(fixture_b.values,
                                   lambda t: np.exp(-(p.a * t) ** (-p.b)))
        assert backend.ad_iw(fixture_b.values, p.a, p.b) == pytest.approx(
            generic, rel=1e-12)


class TestPValues:
    def test_known_params_fixture_a(self, fixture_a):
        res = gof.ad_pvalue_mc(fixture_a, Model.IW, reps=2000, rng=101,
                               params=IWParams(1, 1.1))
        assert res.mode == "known_params"
        assert res.pvalue == pytest.approx(0.94333, abs=0.03)

    def test_fitted_fixture_c_ll(self, fixture_c):
        res = gof.ad_pvalue_mc(fixture_c, Model.LL, reps=1000, rng=102)
        assert res.mode == "fitted_params"
        assert res.pvalue == pytest.approx(0.870, abs=0.04)

    @pytest.mark.xfail(strict=True, reason=(
        "the published 0.9530 for the fitted model on dataset A is not a "
        "refitting-bootstrap p-value; the proper parametric bootstrap "
        "concentrates near 0.67, and 0.9530 reproduces only when replicates "
        "are scored against the fixed fitted parameters"))
    def test_fitted_fixture_a_published_value(self, fixture_a):
        res = gof.ad_pvalue_mc(fixture_a, Model.IW, reps=1000, rng=103)
        assert res.pvalue == pytest.approx(0.9530, abs=0.03)

    def test_fixed_params_construction_reproduces_published_a(self, fixture_a):
        fitted = fit_iw_ml(fixture_a)
        res = gof.ad_pvalue_mc(fixture_a, Model.IW, reps=1000, rng=104,
                               params=fitted)
        assert res.pvalue == pytest.approx(0.9530, abs=0.04)

    def test_estimator_never_zero_and_deterministic(self, fixture_c):
        r1 = gof.ad_pvalue_mc(fixture_c, Model.IW, reps=200, rng=7)
        r2 = gof.ad_pvalue_mc(fixture_c, Model.IW, reps=200, rng=7)
        assert r1.pvalue == r2.pvalue > 0.0
        assert r1.pvalue <= 1.0

    def test_reps_floor(self, fixture_c):
        with pytest.raises(DomainError):
            gof.ad_pvalue_mc(fixture_c, Model.IW, reps=50, rng=1)

    def test_discard_policy(self, fixture_c, monkeypatch):
        calls = {"n": 0}
        real = gof._refit_stat

        def flaky(model, t):
            calls["n"] += 1
            if calls["n"] % 2 == 0:
                return None
            return real(model, t)

        monkeypatch.setattr(gof, "_refit_stat", flaky)
        with pytest.raises(StudyError):
            gof.ad_pvalue_mc(fixture_c, Model.IW, reps=200, rng=9)

    def test_null_pvalues_are_uniform(self):
        # samples truly drawn from the fitted family: p-values ~ uniform
        parent = IWParams(1.0, 2.0)
        pvals = []
        for i in range(200):
            t = iw_sample(parent, 30, substream(300 + i, 3))
            res = gof.ad_pvalue_mc(Sample.from_values(t), Model.IW, reps=199,
                                   rng=1000 + i)
            pvals.append(res.pvalue)
        assert kstest(pvals, "uniform").pvalue > 0.01


class TestSelectModel:
    def test_fixture_b_disagreement(self, fixture_b):
        v = gof.select_model(fixture_b)
        assert v.winner_ad is Model.LL
        assert v.winner_mll is Model.IW
        assert not v.agree

    def test_fixture_c_agreement(self, fixture_c):
        v = gof.select_model(fixture_c)
        assert v.winner_ad is Model.LL
        assert v.winner_mll is Model.LL
        assert v.agree

    def test_large_sample_consistency(self):
        t = iw_sample(IWParams(1, 4.1), 10_000, substream(14, 3))
        v = gof.select_model(Sample.from_values(t))
        assert v.winner_mll is Model.IW

    def test_pvalues_attached(self, fixture_c):
        v = gof.select_model(fixture_c, reps_for_pvalues=200, seed=5)
        assert 0.0 < v.iw.ad_pvalue <= 1.0
        assert 0.0 < v.ll.ad_pvalue <= 1.0


@pytest.fixture(scope="module")
def smoke():
    return gof.selection_study(a_list=(1.0,), b_list=(2.1,),
                               n_list=(10, 30, 50), reps=200, seed=1)


class TestSelectionStudy:
    def test_averages_near_published(self, smoke):
        expected = {10: (0.60, 0.78), 30: (0.77, 0.88), 50: (0.85, 0.93)}
        for n, (p_ad, p_mll, _) in smoke.averages.items():
            assert p_ad == pytest.approx(expected[n][0], abs=0.06)
            assert p_mll == pytest.approx(expected[n][1], abs=0.06)

    def test_both_bounded_by_each_criterion(self, smoke):
        for cell in smoke.grid:
            assert cell.p_both <= min(cell.p_ad, cell.p_mll)
            # the AD-winning replicates are almost all MLL-winning too
            assert cell.p_both >= cell.p_ad - 0.02

    def test_same_seed_bit_identical(self, smoke):
        again = gof.selection_study(a_list=(1.0,), b_list=(2.1,),
                                    n_list=(10, 30, 50), reps=200, seed=1)
        assert again.grid == smoke.grid

    def test_parallelism_invariance(self, smoke):
        parallel = gof.selection_study(a_list=(1.0,), b_list=(2.1,),
                                       n_list=(10, 30, 50), reps=200, seed=1,
                                       workers=2)
        assert parallel.grid == smoke.grid

    def test_cell_order_invariance(self):
        fwd = gof.selection_study(a_list=(1.0, 2.0), b_list=(1.1, 3.1),
                                  n_list=(10,), reps=100, seed=3)
        rev = gof.selection_study(a_list=(2.0, 1.0), b_list=(3.1, 1.1),
                                  n_list=(10,), reps=100, seed=3)
        by_key = {(c.a, c.b): c for c in rev.grid}
        for cell in fwd.grid:
            assert by_key[(cell.a, cell.b)] == cell

    def test_pivotality_check(self):
        study = gof.selection_study(a_list=(1.0, 3.0), b_list=(1.1, 5.1),
                                    n_list=(10, 30), reps=200, seed=2)
        rows = gof.pivotality_check(study)
        assert len(rows) == 4
        for row in rows:
            assert row.passed
            assert row.spread <= 0.02  # shared substreams: near-identical cells

    def test_pivotality_needs_two_cells(self, smoke):
        with pytest.raises(DomainError):
            gof.pivotality_check(smoke)


class TestEmpiricalPivotality:
    def test_fitted_ad_distribution_parameter_free(self):
        # the fitted-model AD statistic has the same law at distant parameter
        # values: 1000 independent replicates each (distinct seeds), compared
        # by the two-sample Kolmogorov-Smirnov test at the 1% level
        def stats_at(a, b, seed):
            out = []
            p = IWParams(a, b)
            for rep in range(1000):
                rng = substream(seed, DOMAIN_STUDY, 9, rep)
                t = np.sort(iw_quantile_vec(p, rng.random(30)))
                a_hat, b_hat, ok = fit_iw(t)
                assert ok
                out.append(ad_iw(t, a_hat, b_hat))
            return np.asarray(out)

        first = stats_at(1.0, 2.0, seed=21)
        second = stats_at(3.0, 5.1, seed=22)
        assert ks_2samp(first, second).pvalue > 0.01
