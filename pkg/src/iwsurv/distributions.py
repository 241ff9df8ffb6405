"""The four survival models behind one small functional interface.

Inverse Weibull (the heavy-tailed, upside-down-bathtub-hazard model this
package is built around), Log-Logistic (its closest commonly used
competitor), Weibull (the reciprocal family, used for fitting), and a cubic
cumulative-hazard model (an "assumption-free" benchmark). A Log-Normal
moment locus is included for the coefficient-of-variation/skewness chart
only.

Parameterizations
-----------------
* Inverse Weibull:  Cdf F(t) = exp{-(a t)^-b};  scale ``a`` has inverse-time
  units, shape ``b`` is dimensionless. The k-th moment exists iff b > k.
* Log-Logistic:     Cdf F(t) = 1 / (1 + (t/sigma)^-gamma); ``sigma`` is the
  median, moments exist iff gamma > k.
* Weibull:          Sf R(x) = exp{-(x/u)^v}. If T is Inverse Weibull (a, b),
  then 1/T is Weibull with u = a, v = b.
* Cubic hazard:     H(t) = c1 t + c2 t^2 + c3 t^3, Sf = exp(-H), valid while
  the hazard h(t) = H'(t) stays positive on (0, t_max].

All evaluation functions are pure; sampling takes an explicit
``numpy.random.Generator``.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from . import kernels, numerics
from .errors import CoefficientError, DomainError, FitError, MomentError

_LOG_HUGE = 700.0  # beyond this, exp(x) is effectively infinite in float64
_SF_CUT_LOG = 27.631021115928547  # -ln(1e-12)


class Model(str, enum.Enum):
    """Identifiers for the fittable model families."""

    IW = "iw"
    LL = "ll"
    POLY = "poly"
    WEIBULL = "weibull"


# --------------------------------------------------------------------------
# parameter containers
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IWParams:
    """Inverse Weibull scale ``a`` (inverse time) and shape ``b``."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"IW parameters must be positive, got {self}")


@dataclass(frozen=True)
class LogLogisticParams:
    """Log-Logistic scale ``sigma`` (the median, time units) and shape ``gamma``."""

    sigma: float
    gamma: float

    def __post_init__(self):
        if not (self.sigma > 0 and self.gamma > 0):
            raise DomainError(f"Log-Logistic parameters must be positive, got {self}")


@dataclass(frozen=True)
class WeibullParams:
    """Weibull scale ``u`` and shape ``v``."""

    u: float
    v: float

    def __post_init__(self):
        if not (self.u > 0 and self.v > 0):
            raise DomainError(f"Weibull parameters must be positive, got {self}")


@dataclass(frozen=True)
class PolyHazardCoeffs:
    """Cubic cumulative hazard H(t) = c1 t + c2 t^2 + c3 t^3 on (0, t_max].

    Construction verifies h(t) = c1 + 2 c2 t + 3 c3 t^2 > 0 on a dense grid
    over (0, t_max] and at the parabola vertex, so H is strictly increasing
    on the declared horizon.
    """

    c1: float
    c2: float
    c3: float
    t_max: float

    def __post_init__(self):
        if not self.t_max > 0:
            raise DomainError(f"t_max must be positive, got {self.t_max}")
        if not self.c1 > 0:
            raise CoefficientError(f"hazard at 0+ is c1 = {self.c1}, must be positive")
        grid = np.linspace(self.t_max / 10_000.0, self.t_max, 10_000)
        if np.any(self._h_vec(grid) <= 0.0):
            raise CoefficientError(f"hazard nonpositive inside (0, {self.t_max}]: {self}")
        if self.c3 != 0.0:
            vertex = -self.c2 / (3.0 * self.c3)
            if 0.0 < vertex <= self.t_max and self._h_vec(vertex) <= 0.0:
                raise CoefficientError(f"hazard nonpositive at vertex t={vertex}: {self}")

    def _h_vec(self, t):
        return self.c1 + 2.0 * self.c2 * t + 3.0 * self.c3 * t * t

    def _H_vec(self, t):
        return t * (self.c1 + t * (self.c2 + t * self.c3))

    def tail_is_proper(self):
        """True when the cubic extrapolation keeps the hazard eventually positive."""
        if self.c3 > 0.0:
            return True
        if self.c3 == 0.0:
            return self.c2 > 0.0 or (self.c2 == 0.0 and self.c1 > 0.0)
        return False


@dataclass(frozen=True)
class ShapeSummary:
    """Landmark points of an Inverse Weibull model.

    ``mode`` < ``hazard_peak`` < ``hazard_upper`` always holds; the hazard
    rises before the peak and falls after ``hazard_upper``.
    ``mrl_changepoint`` (the minimum of the mean residual life, where
    m(t) h(t) = 1) is None when the mean does not exist, with ``note``
    giving the reason.
    """

    mode: float
    hazard_upper: float
    hazard_peak: float
    mrl_changepoint: float | None = None
    note: str | None = None


# --------------------------------------------------------------------------
# Inverse Weibull
# --------------------------------------------------------------------------

def _iw_log_w(p, t):
    # log of w = (a t)^-b
    return -p.b * math.log(p.a * t)


def iw_pdf(p: IWParams, t):
    """Density a b (a t)^-(b+1) exp{-(a t)^-b}; 0 at t = 0 (essential limit)."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return 0.0
    log_w = _iw_log_w(p, t)
    if log_w > _LOG_HUGE:
        return 0.0
    w = math.exp(log_w)
    arg = math.log(p.a * p.b) + (p.b + 1.0) / p.b * log_w - w
    return math.exp(arg) if arg > -745.0 else 0.0


def iw_logpdf(p: IWParams, t):
    if t <= 0:
        return -math.inf
    log_w = _iw_log_w(p, t)
    return math.log(p.a * p.b) + (p.b + 1.0) / p.b * log_w - math.exp(log_w)


def iw_cdf(p: IWParams, t):
    """F(t) = exp{-(a t)^-b}."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return 0.0
    log_w = _iw_log_w(p, t)
    if log_w > _LOG_HUGE:
        return 0.0
    return math.exp(-math.exp(log_w))


def iw_sf(p: IWParams, t):
    """Survival R(t) = 1 - F(t), computed as -expm1 for tail accuracy."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return 1.0
    log_w = _iw_log_w(p, t)
    if log_w > _LOG_HUGE:
        return 1.0
    return -math.expm1(-math.exp(log_w))


def iw_quantile(p: IWParams, q):
    """Inverse Cdf: t = (1/a) (-ln q)^(-1/b)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    return (1.0 / p.a) * (-math.log(q)) ** (-1.0 / p.b)


def iw_hazard(p: IWParams, t):
    """Hazard rate f/R; switches to the f(t) asymptote once R(t) == 1 in float64."""
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    log_w = _iw_log_w(p, t)
    if log_w > math.log(_LOG_HUGE):  # w > 700: survival is 1 to machine precision
        return iw_pdf(p, t)
    w = math.exp(log_w)
    log_num = math.log(p.a * p.b) + (p.b + 1.0) / p.b * log_w
    return math.exp(log_num - math.log(math.expm1(w)))


def iw_moment(p: IWParams, k: int):
    """k-th raw moment a^-k Gamma(1 - k/b); requires b > k."""
    if k < 1:
        raise DomainError(f"moment order must be a positive integer, got {k}")
    if p.b <= k:
        raise MomentError(f"moment of order {k} requires shape b > {k}, got b={p.b}")
    return math.exp(-k * math.log(p.a) + math.lgamma(1.0 - k / p.b))


def iw_mean(p: IWParams):
    return iw_moment(p, 1)


def iw_variance(p: IWParams):
    m1 = iw_moment(p, 1)
    return iw_moment(p, 2) - m1 * m1


def iw_gamma23(b):
    """(coefficient of variation, skewness) of the IW family; scale-free.

    Requires b > 2 for the CV and b > 3 for the skewness.
    """
    if b <= 2.0:
        raise MomentError(f"coefficient of variation requires b > 2, got {b}")
    if b <= 3.0:
        raise MomentError(f"skewness requires b > 3, got {b}")
    g1 = math.gamma(1.0 - 1.0 / b)
    g2 = math.gamma(1.0 - 2.0 / b)
    g3 = math.gamma(1.0 - 3.0 / b)
    var = g2 - g1 * g1
    gamma2 = math.sqrt(var) / g1
    gamma3 = (g3 - 3.0 * g1 * g2 + 2.0 * g1 ** 3) / var ** 1.5
    return gamma2, gamma3


def iw_mrl(p: IWParams, t_r):
    """Mean residual life m(t_r) = E[T - t_r | T > t_r]; requires b > 1.

    Closed form: (1/a) gamma_low(1 - 1/b, (a t_r)^-b) / (1 - exp{-(a t_r)^-b})
    minus t_r, with gamma_low the lower incomplete gamma function. Tends to
    the mean as t_r -> 0 and grows like t_r / (b - 1) in the far tail.
    """
    if p.b <= 1.0:
        raise MomentError(f"mean residual life requires b > 1, got b={p.b}")
    if t_r <= 0:
        raise DomainError(f"t_r must be positive, got {t_r}")
    s = 1.0 - 1.0 / p.b
    log_w = _iw_log_w(p, t_r)
    if log_w > _LOG_HUGE:
        lower = math.exp(math.lgamma(s))
        denom = 1.0
    else:
        w = math.exp(log_w)
        lower = numerics.lower_incomplete_gamma(s, w)
        denom = -math.expm1(-w)
    return (1.0 / p.a) * lower / denom - t_r


def iw_shape_summary(p: IWParams):
    """Mode, hazard landmarks, and the MRL change point of an IW model.

    The hazard peak solves exp(-w) - 1 + b w/(b+1) = 0 in w = (a t)^-b,
    bracketed between the mode and b^(1/b)/a (where the bracket function
    changes sign). The MRL change point solves m(t) h(t) = 1.
    """
    a, b = p.a, p.b
    t_m = (b / (b + 1.0)) ** (1.0 / b) / a
    t_n = b ** (1.0 / b) / a

    def peak_resid(t):
        w = math.exp(_iw_log_w(p, t))
        return math.exp(-w) - 1.0 + b * w / (b + 1.0)

    peak = numerics.find_root(peak_resid, (t_m, t_n))

    if b <= 1.0:
        return ShapeSummary(mode=t_m, hazard_upper=t_n, hazard_peak=peak,
                            mrl_changepoint=None, note="mean does not exist")

    def change_resid(t):
        return iw_mrl(p, t) * iw_hazard(p, t) - 1.0

    bracket = numerics.expand_bracket(change_resid, iw_quantile(p, 1e-9), t_m)
    t_0 = numerics.find_root(change_resid, bracket)
    return ShapeSummary(mode=t_m, hazard_upper=t_n, hazard_peak=peak,
                        mrl_changepoint=t_0)


def iw_sample(p: IWParams, n, rng):
    """n inverse-transform draws: t = (1/a) (-ln U)^(-1/b), U uniform(0,1)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    u = rng.random(n)
    return iw_quantile_vec(p, u)


def iw_quantile_vec(p: IWParams, q):
    q = np.asarray(q, dtype=float)
    return (1.0 / p.a) * (-np.log(q)) ** (-1.0 / p.b)


def iw_cdf_vec(p: IWParams, t):
    return np.exp(-(p.a * np.asarray(t, float)) ** (-p.b))


# --------------------------------------------------------------------------
# Log-Logistic
# --------------------------------------------------------------------------

def _ll_z(p, t):
    # z = gamma ln(t / sigma); Cdf = logistic(z)
    return p.gamma * (math.log(t) - math.log(p.sigma))


def ll_cdf(p: LogLogisticParams, t):
    """F(t) = 1 / (1 + (t/sigma)^-gamma)."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return 0.0
    z = _ll_z(p, t)
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    ez = math.exp(z)
    return ez / (1.0 + ez)


def ll_sf(p: LogLogisticParams, t):
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        return 1.0
    z = _ll_z(p, t)
    if z <= 0:
        return 1.0 / (1.0 + math.exp(z))
    ez = math.exp(-z)
    return ez / (1.0 + ez)


def ll_pdf(p: LogLogisticParams, t):
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    if t == 0.0:
        if p.gamma > 1.0:
            return 0.0
        if p.gamma == 1.0:
            return 1.0 / p.sigma
        return math.inf
    return math.exp(ll_logpdf(p, t))


def ll_logpdf(p: LogLogisticParams, t):
    if t <= 0:
        return -math.inf
    z = _ll_z(p, t)
    softplus = max(z, 0.0) + math.log1p(math.exp(-abs(z)))
    return (math.log(p.gamma) - math.log(p.sigma)
            + (p.gamma - 1.0) / p.gamma * z - 2.0 * softplus)


def ll_hazard(p: LogLogisticParams, t):
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    return math.exp(ll_logpdf(p, t)) / ll_sf(p, t)


def ll_quantile(p: LogLogisticParams, q):
    """Inverse Cdf: t = sigma (1/q - 1)^(-1/gamma)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    return p.sigma * (1.0 / q - 1.0) ** (-1.0 / p.gamma)


def ll_moment(p: LogLogisticParams, k: int):
    """k-th raw moment sigma^k (k pi/gamma) / sin(k pi/gamma); needs gamma > k."""
    if k < 1:
        raise DomainError(f"moment order must be a positive integer, got {k}")
    if p.gamma <= k:
        raise MomentError(f"moment of order {k} requires gamma > {k}, got {p.gamma}")
    x = k * math.pi / p.gamma
    return p.sigma ** k * x / math.sin(x)


def ll_gamma23(gamma):
    """(coefficient of variation, skewness) of the Log-Logistic family."""
    if gamma <= 2.0:
        raise MomentError(f"coefficient of variation requires gamma > 2, got {gamma}")
    if gamma <= 3.0:
        raise MomentError(f"skewness requires gamma > 3, got {gamma}")
    c = [k * math.pi / gamma / math.sin(k * math.pi / gamma) for k in (1, 2, 3)]
    var = c[1] - c[0] * c[0]
    gamma2 = math.sqrt(var) / c[0]
    gamma3 = (c[2] - 3.0 * c[0] * c[1] + 2.0 * c[0] ** 3) / var ** 1.5
    return gamma2, gamma3


def ll_mrl(p: LogLogisticParams, t_r):
    """Mean residual life by adaptive quadrature of the survival function."""
    if p.gamma <= 1.0:
        raise MomentError(f"mean residual life requires gamma > 1, got {p.gamma}")
    if t_r <= 0:
        raise DomainError(f"t_r must be positive, got {t_r}")
    sf_r = ll_sf(p, t_r)
    val, _ = quad(lambda x: ll_sf(p, x) / sf_r, t_r, np.inf, limit=400)
    return val


def ll_sample(p: LogLogisticParams, n, rng):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    u = rng.random(n)
    return p.sigma * (1.0 / u - 1.0) ** (-1.0 / p.gamma)


# --------------------------------------------------------------------------
# Weibull
# --------------------------------------------------------------------------

def weibull_cdf(p: WeibullParams, x):
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")
    return -math.expm1(-((x / p.u) ** p.v))


def weibull_sf(p: WeibullParams, x):
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")
    return math.exp(-((x / p.u) ** p.v))


def weibull_pdf(p: WeibullParams, x):
    if x < 0:
        raise DomainError(f"x must be nonnegative, got {x}")
    if x == 0.0:
        if p.v > 1.0:
            return 0.0
        if p.v == 1.0:
            return 1.0 / p.u
        return math.inf
    z = x / p.u
    return (p.v / p.u) * z ** (p.v - 1.0) * math.exp(-(z ** p.v))


def weibull_logpdf(p: WeibullParams, x):
    if x <= 0:
        return -math.inf
    lz = math.log(x) - math.log(p.u)
    return math.log(p.v / p.u) + (p.v - 1.0) * lz - math.exp(p.v * lz)


def weibull_quantile(p: WeibullParams, q):
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    return p.u * (-math.log1p(-q)) ** (1.0 / p.v)


def weibull_sample(p: WeibullParams, n, rng):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    u = rng.random(n)
    return p.u * (-np.log(u)) ** (1.0 / p.v)


def weibull_mle(x):
    """Maximum likelihood (u, v) by the profile-shape equation.

    The shape solves a monotone one-dimensional equation, bracketed in
    [1e-3, 1e3]; the scale then follows in closed form. Raises
    :class:`FitError` on degenerate input (e.g. all observations equal).
    """
    x = np.asarray(x, dtype=float)
    if x.size < 2:
        raise FitError("Weibull MLE needs at least two observations")
    u, v, ok = kernels.fit_weibull(x)
    if not ok:
        raise FitError("Weibull profile equation has no root in [1e-3, 1e3] "
                       "(degenerate or near-degenerate sample)")
    return WeibullParams(u=u, v=v)


# --------------------------------------------------------------------------
# cubic cumulative hazard
# --------------------------------------------------------------------------

def poly_H(c: PolyHazardCoeffs, t):
    """Cumulative hazard c1 t + c2 t^2 + c3 t^3."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return float(c._H_vec(float(t)))


def poly_h(c: PolyHazardCoeffs, t):
    """Hazard rate c1 + 2 c2 t + 3 c3 t^2."""
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return float(c._h_vec(float(t)))


def poly_cdf(c: PolyHazardCoeffs, t):
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return -math.expm1(-poly_H(c, t))


def poly_sf(c: PolyHazardCoeffs, t):
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return math.exp(-poly_H(c, t))


def poly_pdf(c: PolyHazardCoeffs, t):
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")
    return poly_h(c, t) * math.exp(-poly_H(c, t))


def poly_logpdf(c: PolyHazardCoeffs, t):
    if t <= 0:
        return -math.inf
    h = c._h_vec(t)
    if h <= 0.0:
        return -math.inf
    return math.log(h) - float(c._H_vec(t))


def _poly_require_proper_tail(c):
    if not c.tail_is_proper():
        raise CoefficientError(
            "cumulative hazard is not increasing beyond t_max under the cubic "
            f"extrapolation; tail operations are undefined for {c}")


def poly_quantile(c: PolyHazardCoeffs, q):
    """Inverse Cdf by monotone inversion of H(t) = -ln(1 - q)."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    return float(poly_quantile_vec(c, np.array([q]))[0])


def poly_quantile_vec(c: PolyHazardCoeffs, q):
    q = np.asarray(q, dtype=float)
    target = -np.log1p(-q)
    hi = c.t_max
    for _ in range(200):
        if c._H_vec(hi) >= target.max():
            break
        _poly_require_proper_tail(c)
        hi *= 2.0
    else:
        raise CoefficientError("quantile target unreachable under cubic extrapolation")
    lo = np.zeros_like(target)
    hi = np.full_like(target, hi)
    for _ in range(100):  # bisection to ~1e-30 relative; exact enough for float64
        mid = 0.5 * (lo + hi)
        below = c._H_vec(mid) <= target
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def poly_sample(c: PolyHazardCoeffs, n, rng):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return poly_quantile_vec(c, rng.random(n))


def poly_mrl(c: PolyHazardCoeffs, t_r):
    """Mean residual life by adaptive quadrature of the survival function.

    Integrates exp{-(H(x) - H(t_r))} from t_r out to the point where the
    conditional survival has fallen below 1e-12, evaluating H by its cubic
    form beyond t_max (the model's own extrapolation).
    """
    if t_r <= 0:
        raise DomainError(f"t_r must be positive, got {t_r}")
    _poly_require_proper_tail(c)
    h_r = poly_H(c, t_r)

    def excess(t):
        return float(c._H_vec(t)) - h_r - _SF_CUT_LOG

    bracket = numerics.expand_bracket(excess, t_r, max(2.0 * t_r, c.t_max))
    t_cut = numerics.find_root(excess, bracket, tol=1e-9)
    val, _ = quad(lambda x: math.exp(-(float(c._H_vec(x)) - h_r)), t_r, t_cut,
                  limit=200)
    return val


# --------------------------------------------------------------------------
# Log-Normal (chart locus only)
# --------------------------------------------------------------------------

def lognormal_gamma23(shape):
    """(coefficient of variation, skewness) of a Log-Normal with log-sd ``shape``."""
    if shape <= 0:
        raise DomainError(f"shape must be positive, got {shape}")
    ew = math.exp(shape * shape)
    root = math.sqrt(ew - 1.0)
    return root, (ew + 2.0) * root


# --------------------------------------------------------------------------
# model-generic dispatch
# --------------------------------------------------------------------------

def model_cdf(model: Model, params):
    """Scalar Cdf callable for any fitted family."""
    return {
        Model.IW: lambda t: iw_cdf(params, t),
        Model.LL: lambda t: ll_cdf(params, t),
        Model.POLY: lambda t: poly_cdf(params, t),
        Model.WEIBULL: lambda t: weibull_cdf(params, t),
    }[model]


def model_cdf_vec(model: Model, params):
    """Vectorized Cdf callable (ndarray in, ndarray out)."""
    if model is Model.IW:
        return lambda t: np.exp(-(params.a * np.asarray(t, float)) ** (-params.b))
    if model is Model.LL:
        return lambda t: 1.0 / (1.0 + (np.asarray(t, float) / params.sigma)
                                ** (-params.gamma))
    if model is Model.POLY:
        return lambda t: -np.expm1(-params._H_vec(np.asarray(t, float)))
    if model is Model.WEIBULL:
        return lambda t: -np.expm1(-(np.asarray(t, float) / params.u) ** params.v)
    raise DomainError(f"unknown model {model}")


def model_logpdf(model: Model, params):
    return {
        Model.IW: lambda t: iw_logpdf(params, t),
        Model.LL: lambda t: ll_logpdf(params, t),
        Model.POLY: lambda t: poly_logpdf(params, t),
        Model.WEIBULL: lambda t: weibull_logpdf(params, t),
    }[model]


def model_quantile(model: Model, params, q):
    return {
        Model.IW: iw_quantile,
        Model.LL: ll_quantile,
        Model.POLY: poly_quantile,
        Model.WEIBULL: weibull_quantile,
    }[model](params, q)


def model_sample(model: Model, params, n, rng):
    return {
        Model.IW: iw_sample,
        Model.LL: ll_sample,
        Model.POLY: poly_sample,
        Model.WEIBULL: weibull_sample,
    }[model](params, n, rng)


def model_mrl(model: Model, params, t_r):
    """Mean residual life at time ``t_r``: closed form for IW, quadrature otherwise."""
    if model is Model.IW:
        return iw_mrl(params, t_r)
    if model is Model.LL:
        return ll_mrl(params, t_r)
    if model is Model.POLY:
        return poly_mrl(params, t_r)
    if model is Model.WEIBULL:
        if t_r <= 0:
            raise DomainError(f"t_r must be positive, got {t_r}")
        sf_r = weibull_sf(params, t_r)
        val, _ = quad(lambda x: weibull_sf(params, x) / sf_r, t_r, np.inf, limit=400)
        return val
    raise DomainError(f"unknown model {model}")
