"""Pure-Python/numpy implementation of the hot fitting kernels.

One Monte Carlo replicate of the model-selection machinery costs two maximum
likelihood fits plus two goodness-of-fit statistics, repeated tens of
thousands of times, so these routines are kept free of any object plumbing:
sorted float64 arrays in, plain floats out. ``iwsurv._ckernels`` implements
the identical algorithms (same brackets, same simplex rules, same constants)
in C; either backend can serve estimation and the study drivers.

Failure is reported through ``ok`` flags rather than exceptions so the study
loops can apply their counting policies without try/except overhead.
"""

import math

import numpy as np

from . import numerics
from .errors import BracketError, ConvergenceError

BACKEND_NAME = "python"

WEIBULL_SHAPE_LO = 1e-3
WEIBULL_SHAPE_HI = 1e3
LL_GAMMA_MIN, LL_GAMMA_MAX = 0.5, 50.0


def fit_weibull(x):
    """Weibull MLE (u, v, ok) by the one-dimensional profile equation."""
    x = np.asarray(x, dtype=float)
    n = x.size
    logx = np.log(x)
    mean_logx = logx.mean()
    shift = logx.max()
    d = logx - shift

    def profile(v):
        w = np.exp(v * d)
        return float((w * logx).sum() / w.sum() - 1.0 / v - mean_logx)

    try:
        v = numerics.find_root(profile, (WEIBULL_SHAPE_LO, WEIBULL_SHAPE_HI),
                               tol=1e-12)
    except BracketError:
        return math.nan, math.nan, False
    u = math.exp(shift + math.log(np.exp(v * d).sum() / n) / v)
    return u, v, True


def fit_iw(t):
    """Inverse Weibull MLE (a, b, ok): Weibull MLE on the reciprocal data."""
    u, v, ok = fit_weibull(1.0 / np.asarray(t, dtype=float))
    return u, v, ok


def loglik_ll(t, sigma, gamma):
    t = np.asarray(t, dtype=float)
    z = gamma * (np.log(t) - math.log(sigma))
    softplus = np.maximum(z, 0.0) + np.log1p(np.exp(-np.abs(z)))
    return float(t.size * (math.log(gamma) - math.log(sigma))
                 + ((gamma - 1.0) / gamma) * z.sum() - 2.0 * softplus.sum())


def fit_ll(t, tol=1e-10):
    """Log-Logistic MLE (sigma, gamma, ok) by Nelder-Mead in log coordinates.

    Start: sigma at the sample median (exact for the model median), gamma
    from the moment relation gamma ~ 1.8/CV clipped to a sane range. On a
    blown evaluation budget the best simplex vertex is still returned, with
    ``ok`` False.
    """
    t = np.asarray(t, dtype=float)
    n = t.size
    mean = t.mean()
    sdev = t.std(ddof=1)
    if sdev == 0.0:
        return math.nan, math.nan, False
    logt = np.log(t)
    sum_logt = logt.sum()
    half = n // 2
    ts = np.sort(t)
    median = ts[half] if n % 2 else 0.5 * (ts[half - 1] + ts[half])
    gamma0 = min(max(1.8 * mean / sdev, LL_GAMMA_MIN), LL_GAMMA_MAX)

    def objective(ln_sigma, ln_gamma):
        g = math.exp(ln_gamma)
        z = g * (logt - ln_sigma)
        softplus = np.maximum(z, 0.0) + np.log1p(np.exp(-np.abs(z)))
        return (n * (ln_gamma - ln_sigma)
                + (g - 1.0) * (sum_logt - n * ln_sigma) - 2.0 * softplus.sum())

    start = np.array([math.log(median), math.log(gamma0)])
    try:
        best = numerics.maximize(objective, start, tol=tol)
        ok = True
    except ConvergenceError as exc:
        best, ok = exc.best_x, False
    return math.exp(best[0]), math.exp(best[1]), ok


def ad_from_cdf_values(z):
    """Anderson-Darling statistic from sorted hypothesized-CDF values."""
    n = z.size
    z = np.clip(z, 1e-15, 1.0 - 1e-15)
    coeff = 2.0 * np.arange(1, n + 1) - 1.0
    return float(-n - (coeff * (np.log(z) + np.log1p(-z[::-1]))).sum() / n)


def iw_cdf_values(t, a, b):
    return np.exp(-np.exp(-b * np.log(a * np.asarray(t, dtype=float))))


def ll_cdf_values(t, sigma, gamma):
    return 1.0 / (1.0 + np.exp(-gamma * (np.log(np.asarray(t, dtype=float))
                                         - math.log(sigma))))


def ad_iw(t_sorted, a, b):
    return ad_from_cdf_values(iw_cdf_values(t_sorted, a, b))


def ad_ll(t_sorted, sigma, gamma):
    return ad_from_cdf_values(ll_cdf_values(t_sorted, sigma, gamma))


def loglik_iw(t, a, b):
    t = np.asarray(t, dtype=float)
    log_at = np.log(a * t)
    return float(t.size * math.log(a * b) - (b + 1.0) * log_at.sum()
                 - np.exp(-b * log_at).sum())


def replicate_battery(t_sorted):
    """Fit both candidate families and score one replicate.

    Returns ``(a, b, sigma, gamma, ad_iw, ad_ll, mll_iw, mll_ll, iw_ok,
    ll_ok)``; statistics of a failed family are NaN.
    """
    a, b, iw_ok = fit_iw(t_sorted)
    sigma, gamma, ll_ok = fit_ll(t_sorted)
    stat_iw = mll_iw = stat_ll = mll_ll = math.nan
    if iw_ok:
        stat_iw = ad_iw(t_sorted, a, b)
        mll_iw = loglik_iw(t_sorted, a, b)
    if ll_ok:
        stat_ll = ad_ll(t_sorted, sigma, gamma)
        mll_ll = loglik_ll(t_sorted, sigma, gamma)
    return a, b, sigma, gamma, stat_iw, stat_ll, mll_iw, mll_ll, iw_ok, ll_ok
