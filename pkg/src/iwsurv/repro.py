"""Regenerate the reference results for the bundled datasets and check them.

Every number the package is expected to reproduce on fixtures A, B, C (model
fits, Anderson-Darling statistics, Monte Carlo p-values, moment points, mean
residual life tables, and the selection-study summary) is recomputed from
scratch and compared against its expected value at a stated tolerance. The
``repro`` CLI command renders the outcome as a pass/fail table.

Two expected values are knowingly irreproducible as printed and are kept in
the table as documented failures rather than silently adjusted: see the
notes attached to the selection-study "both criteria" rows (the printed
values duplicate the log-likelihood column, but the fraction of replicates
winning on both criteria cannot exceed the smaller single-criterion
fraction).
"""

from dataclasses import dataclass

from .distributions import IWParams, Model, iw_cdf, iw_gamma23
from .estimation import (fit_iw_ml, fit_ll_ml, fit_poly_lsq, fit_poly_ml,
                         loglik, mrl_at_sf, poly_lsq_grid, rho_sq_hr,
                         sample_gamma23)
from .fixtures import FIXTURE_PARENTS, FIXTURES
from .gof import (ad_for_model, ad_pvalue_mc, pivotality_check, select_model,
                  selection_study)
from .rng import DOMAIN_BOOTSTRAP, substream

SECTIONS = ("s4", "s5", "s7", "table1", "table2")

SMOKE_GRID = {"a_list": (1.0,), "b_list": (2.1,), "n_list": (10, 30, 50),
              "reps": 200}

# Printed selection-study averages: per n, (P-AD, P-MLL, P-AD&MLL).
TABLE2_EXPECTED = {10: (0.60, 0.78, 0.78), 30: (0.77, 0.88, 0.88),
                   50: (0.85, 0.93, 0.93)}

_P_BOTH_NOTE = ("printed value duplicates the log-likelihood column; the "
                "fraction winning on both criteria is bounded by the smaller "
                "single-criterion fraction and tracks the AD column")


@dataclass(frozen=True)
class ReproRow:
    section: str
    name: str
    computed: object
    expected: object
    tol: float
    kind: str  # "abs", "rel", or "exact"
    passed: bool
    note: str = ""


def _check(section, name, computed, expected, tol=0.0, kind="abs", note=""):
    if kind == "exact":
        passed = computed == expected
    elif kind == "rel":
        passed = abs(computed - expected) <= tol * abs(expected)
    else:
        passed = abs(computed - expected) <= tol
    return ReproRow(section=section, name=name, computed=computed,
                    expected=expected, tol=tol, kind=kind, passed=passed,
                    note=note)


def _lsq_window(sample, parent):
    # Cdf window spanned by the sample under its generating model
    return (iw_cdf(parent, float(sample.values.min())),
            iw_cdf(parent, float(sample.values.max())))


def reference_poly_lsq(n_points=50):
    """The "known-parent" cubic hazard model for dataset A's generating Cdf."""
    sample = FIXTURES["A"]
    parent = IWParams(*FIXTURE_PARENTS["A"])
    return fit_poly_lsq((Model.IW, parent), n_points,
                        f_range=_lsq_window(sample, parent))


def run_s4(seed=1, reps=1000):
    """Dataset A: known-parent conformity, cubic-hazard benchmark, IW fit."""
    rows = []
    sample = FIXTURES["A"]
    parent = IWParams(*FIXTURE_PARENTS["A"])
    sec = "s4"

    stat = ad_for_model(sample, Model.IW, parent)
    rows.append(_check(sec, "ad_parent", stat, 0.2927, 0.005))
    known = ad_pvalue_mc(sample, Model.IW, max(reps, 2000),
                         substream(seed, DOMAIN_BOOTSTRAP, 40), params=parent)
    rows.append(_check(sec, "p_parent", known.pvalue, 0.94333, 0.04))

    lsq = reference_poly_lsq()
    rows.append(_check(sec, "lsq_c1", lsq.c1, 0.5305, 0.05, "rel"))
    rows.append(_check(sec, "lsq_c2", lsq.c2, -0.03597, 0.05, "rel"))
    rows.append(_check(sec, "lsq_c3", lsq.c3, 0.0008995, 0.05, "rel"))
    times, target = poly_lsq_grid((Model.IW, parent), 50,
                                  _lsq_window(sample, parent))
    fitted = lsq._H_vec(times)
    r_sq = 1.0 - ((target - fitted) ** 2).sum() / ((target - target.mean()) ** 2).sum()
    rows.append(_check(sec, "lsq_regression_r_sq", float(r_sq), 0.9908, 0.005))
    rows.append(_check(sec, "ad_lsq_poly",
                       ad_for_model(sample, Model.POLY, lsq), 1.152, 0.005))
    poly_p = ad_pvalue_mc(sample, Model.POLY, reps,
                          substream(seed, DOMAIN_BOOTSTRAP, 41), params=lsq)
    rows.append(_check(sec, "p_lsq_poly", poly_p.pvalue, 0.2856, 0.04))

    ml = fit_poly_ml(sample)
    rows.append(_check(sec, "ml_c1", ml.c1, 0.5427, 0.05, "rel"))
    rows.append(_check(sec, "ml_c2", ml.c2, -0.04931, 0.05, "rel"))
    rows.append(_check(sec, "ml_c3", ml.c3, 0.001728, 0.05, "rel"))
    rows.append(_check(sec, "rho_sq_ml_poly",
                       rho_sq_hr(Model.POLY, ml, sample), 0.9758, 0.02))

    iw = fit_iw_ml(sample)
    rows.append(_check(sec, "iw_a", iw.a, 1.027, 0.005))
    rows.append(_check(sec, "iw_b", iw.b, 1.105, 0.005))
    rows.append(_check(sec, "rho_sq_iw", rho_sq_hr(Model.IW, iw, sample),
                       0.9648, 0.02))
    rows.append(_check(sec, "ad_iw", ad_for_model(sample, Model.IW, iw),
                       0.2740, 0.005))
    fixed = ad_pvalue_mc(sample, Model.IW, reps,
                         substream(seed, DOMAIN_BOOTSTRAP, 42), params=iw)
    rows.append(_check(sec, "p_iw", fixed.pvalue, 0.9530, 0.04,
                       note="no-refit construction: replicates scored against "
                            "the fixed fitted parameters (the refitting "
                            "bootstrap gives ~0.67)"))
    return rows


def run_table1(seed=1, reps=1000):
    """Mean residual life of the fitted models against the generating model.

    Times are resolved where the generating (parent) survival equals R, and
    every model's mean residual life is evaluated at that common time.
    """
    rows = []
    sample = FIXTURES["A"]
    parent = IWParams(*FIXTURE_PARENTS["A"])
    ref = (Model.IW, parent)
    iw = fit_iw_ml(sample)
    poly = reference_poly_lsq()
    expected = {
        0.50: (4.268, 17.77, 18.85),
        0.25: (5.833, 33.47, 35.31),
        0.10: (8.958, 77.13, 81.15),
    }
    for r, (exp_poly, exp_iw, exp_true) in expected.items():
        rows.append(_check("table1", f"mrl_{r:.2f}_poly",
                           mrl_at_sf(Model.POLY, poly, r, reference=ref),
                           exp_poly, 0.02, "rel"))
        rows.append(_check("table1", f"mrl_{r:.2f}_iw",
                           mrl_at_sf(Model.IW, iw, r, reference=ref),
                           exp_iw, 0.01, "rel"))
        rows.append(_check("table1", f"mrl_{r:.2f}_true",
                           mrl_at_sf(Model.IW, parent, r),
                           exp_true, 0.005, "rel"))
    return rows


def run_s5(seed=1, reps=1000):
    """Dataset B: moment points, both fits, selection criteria, MRL contrast."""
    rows = []
    sample = FIXTURES["B"]
    parent = IWParams(*FIXTURE_PARENTS["B"])
    ref = (Model.IW, parent)
    sec = "s5"

    g2, g3 = sample_gamma23(sample)
    rows.append(_check(sec, "sample_gamma2", g2, 0.4464, 1e-3))
    rows.append(_check(sec, "sample_gamma3", g3, 4.894, 1e-3))
    pg2, pg3 = iw_gamma23(parent.b)
    rows.append(_check(sec, "parent_gamma2", pg2, 0.4100, 1e-3))
    rows.append(_check(sec, "parent_gamma3", pg3, 5.236, 1e-3))

    rows.append(_check(sec, "ad_parent",
                       ad_for_model(sample, Model.IW, parent), 1.460, 0.005))
    known = ad_pvalue_mc(sample, Model.IW, reps,
                         substream(seed, DOMAIN_BOOTSTRAP, 50), params=parent)
    rows.append(_check(sec, "p_parent", known.pvalue, 0.1864, 0.04))

    iw = fit_iw_ml(sample)
    rows.append(_check(sec, "iw_a", iw.a, 0.9629, 0.005))
    rows.append(_check(sec, "iw_b", iw.b, 4.752, 0.005))
    rows.append(_check(sec, "ad_iw", ad_for_model(sample, Model.IW, iw),
                       0.5994, 0.005))
    p_iw = ad_pvalue_mc(sample, Model.IW, reps,
                        substream(seed, DOMAIN_BOOTSTRAP, 51))
    rows.append(_check(sec, "p_iw", p_iw.pvalue, 0.1250, 0.04))

    ll = fit_ll_ml(sample)
    rows.append(_check(sec, "ll_sigma", ll.sigma, 1.145, 0.01))
    rows.append(_check(sec, "ll_gamma", ll.gamma, 7.394, 0.01))
    rows.append(_check(sec, "ad_ll", ad_for_model(sample, Model.LL, ll),
                       0.3587, 0.005))
    p_ll = ad_pvalue_mc(sample, Model.LL, reps,
                        substream(seed, DOMAIN_BOOTSTRAP, 52))
    rows.append(_check(sec, "p_ll", p_ll.pvalue, 0.3875, 0.04))

    rows.append(_check(sec, "mll_iw", loglik(Model.IW, iw, sample), -8.134, 0.05))
    rows.append(_check(sec, "mll_ll", loglik(Model.LL, ll, sample), -9.403, 0.05))
    verdict = select_model(sample)
    rows.append(_check(sec, "winner_ad", verdict.winner_ad.value, "ll",
                       kind="exact"))
    rows.append(_check(sec, "winner_mll", verdict.winner_mll.value, "iw",
                       kind="exact"))

    rows.append(_check(sec, "mrl10_iw",
                       mrl_at_sf(Model.IW, iw, 0.1, reference=ref),
                       0.4729, 0.01, "rel"))
    rows.append(_check(sec, "mrl10_ll",
                       mrl_at_sf(Model.LL, ll, 0.1, reference=ref),
                       0.2775, 0.01, "rel"))
    rows.append(_check(sec, "mrl10_true", mrl_at_sf(Model.IW, parent, 0.1),
                       0.5754, 0.005, "rel"))
    return rows


def run_s7(seed=1, reps=1000):
    """Dataset C (insulating fluid): both fits and their selection criteria."""
    rows = []
    sample = FIXTURES["C"]
    sec = "s7"

    g2, g3 = sample_gamma23(sample)
    rows.append(_check(sec, "sample_gamma2", g2, 1.439, 1e-3))
    rows.append(_check(sec, "sample_gamma3", g3, 2.428, 1e-3))

    iw = fit_iw_ml(sample)
    rows.append(_check(sec, "iw_a", iw.a, 0.688, 0.01))
    rows.append(_check(sec, "iw_b", iw.b, 1.03, 0.01))
    rows.append(_check(sec, "ad_iw", ad_for_model(sample, Model.IW, iw),
                       0.312, 0.005))
    p_iw = ad_pvalue_mc(sample, Model.IW, reps,
                        substream(seed, DOMAIN_BOOTSTRAP, 60))
    rows.append(_check(sec, "p_iw", p_iw.pvalue, 0.596, 0.04))
    rows.append(_check(sec, "mll_iw", loglik(Model.IW, iw, sample), -36.1, 0.05))

    ll = fit_ll_ml(sample)
    swap_note = ("published estimates carry transposed labels; the scale must "
                 "sit near the sample median 2.58 and the published AD "
                 "statistic and MLL reproduce only with this orientation")
    rows.append(_check(sec, "ll_sigma", ll.sigma, 2.37, 0.02, note=swap_note))
    rows.append(_check(sec, "ll_gamma", ll.gamma, 1.68, 0.02, note=swap_note))
    rows.append(_check(sec, "ad_ll", ad_for_model(sample, Model.LL, ll),
                       0.201, 0.005))
    p_ll = ad_pvalue_mc(sample, Model.LL, reps,
                        substream(seed, DOMAIN_BOOTSTRAP, 61))
    rows.append(_check(sec, "p_ll", p_ll.pvalue, 0.870, 0.04))
    rows.append(_check(sec, "mll_ll", loglik(Model.LL, ll, sample), -35.8, 0.05))

    verdict = select_model(sample)
    rows.append(_check(sec, "winner_ad", verdict.winner_ad.value, "ll",
                       kind="exact"))
    rows.append(_check(sec, "winner_mll", verdict.winner_mll.value, "ll",
                       kind="exact"))
    rows.append(_check(sec, "criteria_agree", verdict.agree, True, kind="exact"))
    return rows


def run_table2(seed=1, reps=1000, workers=1, fast=False):
    """Selection-study averages and the cross-cell pivotality spreads."""
    rows = []
    if fast:
        study = selection_study(seed=seed, workers=workers, **SMOKE_GRID)
        tol = 0.06
    else:
        study = selection_study(seed=seed, reps=reps, workers=workers)
        tol = 0.03
    for n, (p_ad, p_mll, p_both) in sorted(study.averages.items()):
        exp_ad, exp_mll, exp_both = TABLE2_EXPECTED[n]
        rows.append(_check("table2", f"n{n}_p_ad", p_ad, exp_ad, tol))
        rows.append(_check("table2", f"n{n}_p_mll", p_mll, exp_mll, tol))
        rows.append(_check("table2", f"n{n}_p_both", p_both, exp_both, tol,
                           note=_P_BOTH_NOTE))
    if not fast:
        for r in pivotality_check(study):
            rows.append(_check("table2", f"n{r.n}_spread_{r.index}",
                               r.spread, 0.0, r.bound,
                               note="range across the 15 (a, b) cells; bound "
                                    "is 3 binomial standard errors"))
    return rows, study


def run_sections(sections, seed=1, reps=1000, workers=1, fast=False):
    """Run the requested repro sections; returns (rows, study_or_None)."""
    rows = []
    study = None
    for section in sections:
        if section == "s4":
            rows.extend(run_s4(seed, reps))
        elif section == "s5":
            rows.extend(run_s5(seed, reps))
        elif section == "s7":
            rows.extend(run_s7(seed, reps))
        elif section == "table1":
            rows.extend(run_table1(seed, reps))
        elif section == "table2":
            t2, study = run_table2(seed, reps, workers, fast)
            rows.extend(t2)
        else:
            raise ValueError(f"unknown section {section!r}")
    return rows, study
