"""Maximum-likelihood and least-squares fitting, likelihoods, and sample stats.

The Inverse Weibull fit rides on the Weibull profile MLE of the reciprocal
data (if T is IW(a, b) then 1/T is Weibull(u=a, v=b), so the fits coincide).
The Log-Logistic fit is a two-parameter simplex maximization in log
coordinates. Both run on the kernel backend selected in :mod:`iwsurv.kernels`.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import kernels, numerics
from .distributions import (IWParams, LogLogisticParams, Model,
                            PolyHazardCoeffs, WeibullParams, model_logpdf,
                            model_mrl, model_quantile)
from .errors import (ConvergenceError, DomainError, FitError,
                     UndefinedStatisticError)


@dataclass(frozen=True)
class Sample:
    """Positive observations in ascending order plus a label."""

    values: np.ndarray
    name: str = ""

    @classmethod
    def from_values(cls, values, name=""):
        arr = np.sort(np.asarray(values, dtype=float))
        if arr.size == 0:
            raise DomainError("sample is empty")
        if not np.all(arr > 0.0):
            raise DomainError("sample values must be strictly positive")
        arr.flags.writeable = False
        return cls(values=arr, name=name)

    @property
    def n(self):
        return self.values.size


@dataclass(frozen=True)
class FitReport:
    """One model fitted to one sample, with its comparison statistics."""

    model: Model
    params: object
    mll: float
    ad_stat: float
    ad_pvalue: float | None = None
    rho_sq: float | None = None
    notes: dict = field(default_factory=dict)


def _values(s):
    if isinstance(s, Sample):
        return s.values
    return Sample.from_values(s).values


def _require_n(t, minimum, what):
    if t.size < minimum:
        raise FitError(f"{what} needs at least {minimum} observations, got {t.size}")


def fit_iw_ml(s) -> IWParams:
    """Inverse Weibull MLE via the Weibull profile equation on reciprocals."""
    t = _values(s)
    _require_n(t, 3, "Inverse Weibull fit")
    a, b, ok = kernels.fit_iw(t)
    if not ok:
        raise FitError("Inverse Weibull MLE failed: profile equation has no "
                       "root (degenerate sample?)")
    return IWParams(a=a, b=b)


def fit_ll_ml(s, tol=1e-10) -> LogLogisticParams:
    """Log-Logistic MLE; starts at (median, 1.8/CV) and maximizes by simplex."""
    t = _values(s)
    _require_n(t, 3, "Log-Logistic fit")
    sigma, gamma, ok = kernels.fit_ll(t, tol)
    if not math.isfinite(sigma):
        raise FitError("Log-Logistic MLE failed (zero sample variance?)")
    if not ok:
        raise ConvergenceError("Log-Logistic MLE did not converge within the "
                               "evaluation budget",
                               best_x=(sigma, gamma),
                               best_f=kernels.loglik_ll(t, sigma, gamma))
    return LogLogisticParams(sigma=sigma, gamma=gamma)


def fit_weibull_ml(s) -> WeibullParams:
    from .distributions import weibull_mle
    return weibull_mle(_values(s))


def fit_poly_ml(s, order_horizon=1.05) -> PolyHazardCoeffs:
    """ML cubic cumulative hazard, hazard kept positive on (0, max(t)*1.05].

    Simplex maximization from the exponential sub-model (c1 = 1/mean), with
    an infeasibility wall on a dense hazard-positivity grid.
    """
    t = _values(s)
    _require_n(t, 4, "cubic hazard fit")
    if np.unique(t).size < t.size:
        raise FitError("cubic hazard fit requires distinct observations")
    t_max = float(t.max()) * order_horizon
    grid = np.linspace(t_max / 10_000.0, t_max, 10_000)

    def loglik(c1, c2, c3):
        if c1 <= 0.0 or np.any(c1 + 2.0 * c2 * grid + 3.0 * c3 * grid * grid <= 0.0):
            return -math.inf
        h = c1 + 2.0 * c2 * t + 3.0 * c3 * t * t
        big_h = t * (c1 + t * (c2 + t * c3))
        return float(np.log(h).sum() - big_h.sum())

    start = np.array([1.0 / t.mean(), 0.0, 0.0])
    best = numerics.maximize(loglik, start, tol=1e-12, max_fevals=40_000)
    coeffs = PolyHazardCoeffs(c1=float(best[0]), c2=float(best[1]),
                              c3=float(best[2]), t_max=t_max)
    if np.min(coeffs._h_vec(grid)) < 1e-8 * coeffs.c1:
        warnings.warn("cubic hazard ML solution is boundary-active "
                      "(hazard touches zero inside the horizon)")
    return coeffs


def fit_poly_lsq(reference, n_points=50, f_range=None) -> PolyHazardCoeffs:
    """Least-squares cubic cumulative hazard through a reference Cdf.

    Takes ``n_points`` vertically equally spaced Cdf levels, maps them to
    times through the reference quantile function, and regresses the exact
    cumulative hazard -ln(1 - F) on (t, t^2, t^3) without intercept.

    Parameters
    ----------
    reference : (Model, params)
        Family and parameters of the reference distribution.
    n_points : int
        Number of Cdf levels.
    f_range : (float, float), optional
        Inclusive Cdf window to spread the levels over. Default is the
        interior grid i/(n_points + 1), i = 1..n_points, which excludes the
        endpoints 0 and 1 where the quantile diverges.
    """
    if n_points < 4:
        raise FitError("cubic least squares needs at least 4 points")
    if f_range is not None:
        lo, hi = f_range
        if not 0.0 < lo < hi < 1.0:
            raise DomainError(f"f_range must satisfy 0 < lo < hi < 1, got {f_range}")
    times, target = poly_lsq_grid(reference, n_points, f_range)
    design = np.column_stack([times, times ** 2, times ** 3])
    coef, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < 3:
        raise FitError("singular normal equations in cubic least squares")
    return PolyHazardCoeffs(c1=float(coef[0]), c2=float(coef[1]),
                            c3=float(coef[2]), t_max=float(times.max()))


def poly_lsq_grid(reference, n_points=50, f_range=None):
    """(times, exact cumulative hazards) grid used by :func:`fit_poly_lsq`."""
    model, params = reference
    if f_range is None:
        levels = np.arange(1, n_points + 1) / (n_points + 1.0)
    else:
        levels = np.linspace(f_range[0], f_range[1], n_points)
    times = np.array([model_quantile(model, params, q) for q in levels])
    return times, -np.log1p(-levels)


_FITTERS = {
    Model.IW: fit_iw_ml,
    Model.LL: fit_ll_ml,
    Model.POLY: fit_poly_ml,
    Model.WEIBULL: fit_weibull_ml,
}


def fit_model(model: Model, s):
    """Dispatch to the family's maximum likelihood fitter."""
    return _FITTERS[model](s)


def loglik(model: Model, params, s):
    """Sum of log densities; -inf (with a warning) if any observation has
    zero density under the model."""
    t = _values(s)
    if model is Model.IW:
        return kernels.loglik_iw(t, params.a, params.b)
    if model is Model.LL:
        return kernels.loglik_ll(t, params.sigma, params.gamma)
    lp = model_logpdf(model, params)
    total = 0.0
    for x in t:
        v = lp(float(x))
        if v == -math.inf:
            warnings.warn(f"zero density at observation {x}; log-likelihood is -inf")
            return -math.inf
        total += v
    return total


def rho_sq_hr(model: Model, params, s):
    """Coefficient of determination on the cumulative-hazard scale.

    Empirical cumulative hazard -ln(1 - p_i) at plotting positions
    p_i = i/(n+1) against the model's H at the order statistics.
    """
    t = _values(s)
    if t.size < 3:
        raise DomainError("rho_sq needs at least 3 observations")
    p = np.arange(1, t.size + 1) / (t.size + 1.0)
    h_emp = -np.log1p(-p)
    from .distributions import model_cdf_vec
    sf = 1.0 - model_cdf_vec(model, params)(t)
    if np.any(sf <= 0.0):
        raise DomainError("model survival vanishes at a data point")
    h_mod = -np.log(sf)
    ss_tot = float(((h_emp - h_emp.mean()) ** 2).sum())
    if ss_tot == 0.0:
        raise UndefinedStatisticError("empirical cumulative hazard has no variance")
    return 1.0 - float(((h_emp - h_mod) ** 2).sum()) / ss_tot


def sample_gamma23(s):
    """Sample (coefficient of variation, skewness).

    CV uses the (n-1)-denominator standard deviation; skewness is
    m3 / m2^(3/2) with the biased (1/n) central moments.
    """
    t = _values(s)
    if t.size < 3:
        raise DomainError("sample moments need at least 3 observations")
    mean = t.mean()
    m2 = float(((t - mean) ** 2).mean())
    if m2 == 0.0:
        raise UndefinedStatisticError("sample variance is zero")
    m3 = float(((t - mean) ** 3).mean())
    gamma2 = t.std(ddof=1) / mean
    gamma3 = m3 / m2 ** 1.5
    return float(gamma2), float(gamma3)


def mrl_at_sf(model: Model, params, big_r, reference=None):
    """Mean residual life of ``model`` at the time where survival equals ``big_r``.

    The time is resolved through ``reference`` (a (Model, params) pair) when
    given, so different fitted models can be compared at a common reference
    time; by default the model's own quantile is used.
    """
    if not 0.0 < big_r < 1.0:
        raise DomainError(f"survivor fraction must lie in (0, 1), got {big_r}")
    if reference is None:
        reference = (model, params)
    ref_model, ref_params = reference
    t_r = model_quantile(ref_model, ref_params, 1.0 - big_r)
    return model_mrl(model, params, t_r)
