"""Anderson-Darling machinery, bootstrap p-values, and the selection study.

The selection problem: data known to come from a heavy-tailed
upside-down-bathtub model, candidates Inverse Weibull vs Log-Logistic, both
fitted by maximum likelihood. Two criteria are scored, the smaller
Anderson-Darling statistic and the larger maximized log-likelihood, and the
Monte Carlo study estimates the probability that each criterion picks the
Inverse Weibull when it is the truth.

Both criteria are pivotal for these two families (location-scale after a log
transform), so the study shares replicate substreams across the scale/shape
grid at fixed sample size: the per-cell results then agree up to floating
point noise, and the grid doubles as an equivariance check. Distributional
pivotality itself is exercised separately (with distinct seeds) in the test
suite.
"""

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .distributions import IWParams, Model, iw_quantile_vec, model_sample
from .errors import DomainError, FitError, StudyError
from .estimation import FitReport, Sample, fit_model, loglik, rho_sq_hr
from .rng import DOMAIN_BOOTSTRAP, DOMAIN_STUDY, substream

DEFAULT_A_GRID = (1.0, 2.0, 3.0)
DEFAULT_B_GRID = (1.1, 2.1, 3.1, 4.1, 5.1)
DEFAULT_N_GRID = (10, 30, 50)
DEFAULT_REPS = 1000

_CLAMP = 1e-15


@dataclass(frozen=True)
class ADResult:
    """Anderson-Darling statistic with its Monte Carlo p-value."""

    stat: float
    pvalue: float
    reps: int
    mode: str  # "known_params" or "fitted_params"
    discarded: int = 0


@dataclass(frozen=True)
class SelectionVerdict:
    iw: FitReport
    ll: FitReport
    winner_ad: Model
    winner_mll: Model
    agree: bool


@dataclass(frozen=True)
class CellResult:
    a: float
    b: float
    n: int
    p_ad: float
    p_mll: float
    p_both: float
    reps: int


@dataclass(frozen=True)
class SelectionStudyResult:
    grid: tuple
    averages: dict  # n -> (p_ad, p_mll, p_both)
    seed: int
    reps: int


@dataclass(frozen=True)
class PivotalityRow:
    n: int
    index: str
    spread: float
    bound: float
    passed: bool


def ad_statistic(s, cdf):
    """Anderson-Darling A_n^2 of a sample against a hypothesized Cdf.

    Uses the order-statistic form
    -n - (1/n) sum (2i-1) [ln F(t_(i)) + ln(1 - F(t_(n+1-i)))].
    Cdf values falling on 0 or 1 are clamped to [1e-15, 1 - 1e-15] with a
    warning, since the statistic is otherwise infinite.
    """
    t = s.values if isinstance(s, Sample) else np.sort(np.asarray(s, float))
    n = t.size
    try:
        z = np.asarray(cdf(t), dtype=float)
        if z.shape != t.shape:
            raise TypeError
    except Exception:
        z = np.array([cdf(float(x)) for x in t], dtype=float)
    if np.any(z <= 0.0) or np.any(z >= 1.0):
        warnings.warn("hypothesized Cdf hits 0 or 1 at a data point; clamped")
        z = np.clip(z, _CLAMP, 1.0 - _CLAMP)
    coeff = 2.0 * np.arange(1, n + 1) - 1.0
    return float(-n - (coeff * (np.log(z) + np.log1p(-z[::-1]))).sum() / n)


def ad_for_model(s, model: Model, params):
    """A_n^2 against a parametric family, on the fast kernel path where one exists."""
    t = s.values if isinstance(s, Sample) else np.sort(np.asarray(s, float))
    if model is Model.IW:
        return kernels.ad_iw(t, params.a, params.b)
    if model is Model.LL:
        return kernels.ad_ll(t, params.sigma, params.gamma)
    from .distributions import model_cdf_vec
    return ad_statistic(t, model_cdf_vec(model, params))


def _refit_stat(model: Model, t_sorted):
    # returns the AD statistic at the replicate's own ML fit, or None
    if model is Model.IW:
        a, b, ok = kernels.fit_iw(t_sorted)
        return kernels.ad_iw(t_sorted, a, b) if ok else None
    if model is Model.LL:
        sigma, gamma, ok = kernels.fit_ll(t_sorted)
        return kernels.ad_ll(t_sorted, sigma, gamma) if ok else None
    try:
        params = fit_model(model, Sample.from_values(t_sorted))
    except Exception:
        return None
    return ad_for_model(t_sorted, model, params)


def ad_pvalue_mc(s, family: Model, reps=DEFAULT_REPS, rng=None, params=None):
    """Monte Carlo p-value for the Anderson-Darling statistic.

    With ``params`` given, runs the known-parameters test: replicates are
    drawn from and scored against those fixed parameters. Otherwise the
    family is fitted to the sample, replicates are drawn from the fit and
    refitted individually (the parametric bootstrap for estimated
    parameters). Replicates whose refit fails are discarded and counted;
    more than 5% discards aborts with :class:`StudyError`.

    ``rng`` may be a ``numpy.random.Generator`` or an integer seed.
    """
    if reps < 100:
        raise DomainError(f"reps must be at least 100, got {reps}")
    if rng is None or isinstance(rng, (int, np.integer)):
        rng = substream(0 if rng is None else int(rng), DOMAIN_BOOTSTRAP)
    sample = s if isinstance(s, Sample) else Sample.from_values(s)
    n = sample.n

    if params is not None:
        mode = "known_params"
        null_params = params
    else:
        mode = "fitted_params"
        null_params = fit_model(family, sample)
    stat0 = ad_for_model(sample, family, null_params)

    exceed = 0
    kept = 0
    discarded = 0
    for _ in range(reps):
        t = np.sort(model_sample(family, null_params, n, rng))
        if mode == "known_params":
            stat = ad_for_model(t, family, null_params)
        else:
            stat = _refit_stat(family, t)
            if stat is None:
                discarded += 1
                continue
        kept += 1
        if stat >= stat0:
            exceed += 1
    if discarded > 0.05 * reps:
        raise StudyError(f"{discarded}/{reps} bootstrap replicates discarded")
    return ADResult(stat=stat0, pvalue=(1.0 + exceed) / (kept + 1.0),
                    reps=kept, mode=mode, discarded=discarded)


def _fit_report(model: Model, sample, reps, rng):
    try:
        params = fit_model(model, sample)
    except Exception as exc:
        raise FitError(f"{model.value} fit failed: {exc}") from exc
    report = FitReport(
        model=model,
        params=params,
        mll=loglik(model, params, sample),
        ad_stat=ad_for_model(sample, model, params),
        rho_sq=rho_sq_hr(model, params, sample),
    )
    if reps > 0:
        res = ad_pvalue_mc(sample, model, reps, rng)
        report = FitReport(model=model, params=params, mll=report.mll,
                           ad_stat=report.ad_stat, ad_pvalue=res.pvalue,
                           rho_sq=report.rho_sq)
    return report


def select_model(s, reps_for_pvalues=0, seed=0):
    """Fit Inverse Weibull and Log-Logistic, report both, and pick winners.

    The smaller Anderson-Darling statistic and the larger maximized
    log-likelihood each name a winner; exact ties go to the Log-Logistic.
    """
    sample = s if isinstance(s, Sample) else Sample.from_values(s)
    iw = _fit_report(Model.IW, sample, reps_for_pvalues,
                     substream(seed, DOMAIN_BOOTSTRAP, 1))
    ll = _fit_report(Model.LL, sample, reps_for_pvalues,
                     substream(seed, DOMAIN_BOOTSTRAP, 2))
    winner_ad = Model.IW if iw.ad_stat < ll.ad_stat else Model.LL
    winner_mll = Model.IW if iw.mll > ll.mll else Model.LL
    return SelectionVerdict(iw=iw, ll=ll, winner_ad=winner_ad,
                            winner_mll=winner_mll,
                            agree=winner_ad is winner_mll)


def _run_cell(args):
    seed, n_index, a, b, n, reps = args
    params = IWParams(a=a, b=b)
    wins_ad = wins_mll = wins_both = 0
    for rep in range(reps):
        rng = substream(seed, DOMAIN_STUDY, n_index, rep)
        t = np.sort(iw_quantile_vec(params, rng.random(n)))
        (_, _, _, _, stat_iw, stat_ll, mll_iw, mll_ll,
         iw_ok, ll_ok) = kernels.replicate_battery(t)
        # a failed fit counts as a loss for the failing family
        w_ad = bool(iw_ok) and ((not ll_ok) or stat_iw < stat_ll)
        w_mll = bool(iw_ok) and ((not ll_ok) or mll_iw > mll_ll)
        wins_ad += w_ad
        wins_mll += w_mll
        wins_both += w_ad and w_mll
    return CellResult(a=a, b=b, n=n, p_ad=wins_ad / reps, p_mll=wins_mll / reps,
                      p_both=wins_both / reps, reps=reps)


def selection_study(a_list=DEFAULT_A_GRID, b_list=DEFAULT_B_GRID,
                    n_list=DEFAULT_N_GRID, reps=DEFAULT_REPS, seed=1,
                    workers=1):
    """Probability of selecting the Inverse Weibull when it is the truth.

    For every (a, b, n) cell, ``reps`` samples of size n are drawn from
    IW(a, b) and both families are fitted to each; the cell records the
    fraction of replicates where the IW fit wins on the Anderson-Darling
    criterion, on the log-likelihood criterion, and on both at once.
    Averages over the (a, b) grid are reported per n.

    Replicate substreams are keyed by (seed, n-index, replicate) only, i.e.
    shared across the (a, b) grid: the criteria are pivotal, so cells at the
    same n are replays of the same comparisons through different parameter
    values (common random numbers). Results are bit-identical for any
    ``workers`` count.
    """
    if reps < 1:
        raise DomainError("reps must be positive")
    if not (a_list and b_list and n_list):
        raise DomainError("parameter grids must be non-empty")
    tasks = [(seed, n_index, float(a), float(b), int(n), int(reps))
             for n_index, n in enumerate(n_list)
             for a in a_list
             for b in b_list]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            grid = tuple(pool.map(_run_cell, tasks))
    else:
        grid = tuple(_run_cell(t) for t in tasks)

    averages = {}
    for n in n_list:
        cells = [c for c in grid if c.n == n]
        averages[int(n)] = (
            sum(c.p_ad for c in cells) / len(cells),
            sum(c.p_mll for c in cells) / len(cells),
            sum(c.p_both for c in cells) / len(cells),
        )
    return SelectionStudyResult(grid=grid, averages=averages, seed=seed,
                                reps=reps)


def pivotality_check(result: SelectionStudyResult):
    """Spread of the per-cell selection fractions across the (a, b) grid.

    For each sample size and each criterion, the range across cells must
    not exceed three binomial standard errors of a single cell estimate.
    """
    n_values = sorted({c.n for c in result.grid})
    rows = []
    for n in n_values:
        cells = [c for c in result.grid if c.n == n]
        if len(cells) < 2:
            raise DomainError("pivotality check needs at least 2 cells per n")
        for index in ("p_ad", "p_mll"):
            values = [getattr(c, index) for c in cells]
            mean = sum(values) / len(values)
            bound = 3.0 * math.sqrt(max(mean * (1.0 - mean), 1e-12) / result.reps)
            spread = max(values) - min(values)
            rows.append(PivotalityRow(n=n, index=index, spread=spread,
                                      bound=bound, passed=spread <= bound))
    return rows
