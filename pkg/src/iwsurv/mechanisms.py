"""Forward simulators for three physical mechanisms that generate IW lifetimes.

Each mechanism has a closed-form parameter mapping to an Inverse Weibull
model and an exact single-draw simulator (the underlying randomness is one
Weibull level per unit, so the threshold-crossing time is available in
closed form; no time stepping is involved). The defensive-attempts mechanism
defines the lifetime law only marginally, through the probability of
manifest failure by time t, and is therefore verified pointwise.

A max-of-i.i.d. harness is included: the IW family is max-stable,
max of n i.i.d. IW(a, b) ~ IW(a n^(-1/b), b).
"""

import math
from dataclasses import dataclass

import numpy as np

from .distributions import IWParams, iw_quantile
from .errors import DomainError
from .estimation import Sample
from .gof import ad_statistic

# upper 1% point of the asymptotic null of A_n^2 with fully known parameters
AD_CRIT_1PCT = 3.857


@dataclass(frozen=True)
class DeteriorationConfig:
    """Monotone damage growth k t^h with random Weibull level, threshold D.

    The damage index at time t is Y(t) = k t^h W with W ~ Weibull(1, v);
    failure occurs when Y reaches the threshold D.
    """

    k: float
    h: float
    v: float
    d: float

    def __post_init__(self):
        if not (self.k > 0 and self.h > 0 and self.v > 0 and self.d > 0):
            raise DomainError(f"all deterioration parameters must be positive: {self}")


@dataclass(frozen=True)
class StressStrengthConfig:
    """Random Weibull(u, v) stress against strength decaying as k t^-h."""

    u: float
    v: float
    k: float
    h: float

    def __post_init__(self):
        if not (self.u > 0 and self.v > 0 and self.k > 0 and self.h > 0):
            raise DomainError(f"all stress-strength parameters must be positive: {self}")


@dataclass(frozen=True)
class DefensiveConfig:
    """Poisson(beta t) defensive attempts, each succeeding with prob k t^-h.

    Failure manifests by time t only if every attempt up to t failed. Needs
    h > 1 and t >= k^(1/h) so the success probability is a valid one.
    """

    beta: float
    k: float
    h: float

    def __post_init__(self):
        if not (self.beta > 0 and self.k > 0):
            raise DomainError(f"beta and k must be positive: {self}")
        if not self.h > 1:
            raise DomainError(f"h must exceed 1, got {self.h}")

    @property
    def t_min(self):
        return self.k ** (1.0 / self.h)


def deterioration_iw(c: DeteriorationConfig) -> IWParams:
    """Exact lifetime law of the deterioration mechanism: a=(k/D)^(1/h), b=v h."""
    return IWParams(a=(c.k / c.d) ** (1.0 / c.h), b=c.v * c.h)


def simulate_deterioration(c: DeteriorationConfig, n, rng) -> Sample:
    """Threshold-crossing times T = (D/(k W))^(1/h) for n independent units."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    w = (-np.log(rng.random(n))) ** (1.0 / c.v)
    t = (c.d / (c.k * w)) ** (1.0 / c.h)
    return Sample.from_values(t, name="deterioration")


def stress_strength_iw(c: StressStrengthConfig) -> IWParams:
    """Exact lifetime law of the stress-strength mechanism: a=(u/k)^(1/h), b=v h."""
    return IWParams(a=(c.u / c.k) ** (1.0 / c.h), b=c.v * c.h)


def simulate_stress_strength(c: StressStrengthConfig, n, rng) -> Sample:
    """Times T = (k/S)^(1/h) at which the decaying strength meets the stress."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    s = c.u * (-np.log(rng.random(n))) ** (1.0 / c.v)
    t = (c.k / s) ** (1.0 / c.h)
    return Sample.from_values(t, name="stress-strength")


def defensive_iw(c: DefensiveConfig) -> IWParams:
    """Exact failure law of the defensive-attempts mechanism: b=h-1, a=(beta k)^(-1/b)."""
    b = c.h - 1.0
    return IWParams(a=(c.beta * c.k) ** (-1.0 / b), b=b)


def defensive_success_prob(c: DefensiveConfig, t):
    if t < c.t_min:
        raise DomainError(f"success probability needs t >= k^(1/h) = {c.t_min}, got {t}")
    return c.k * t ** (-c.h)


def defensive_cdf(c: DefensiveConfig, t):
    """Closed-form probability of manifest failure by time t."""
    if t < c.t_min:
        raise DomainError(f"defensive mechanism needs t >= k^(1/h) = {c.t_min}, got {t}")
    return math.exp(-c.beta * c.k * t ** (-(c.h - 1.0)))


def defensive_cdf_empirical(c: DefensiveConfig, t, n, rng):
    """Fraction of n simulated histories with failure manifest by time t.

    Each history draws N ~ Poisson(beta t) attempts, each succeeding
    independently with probability k t^-h; failure manifests iff all fail.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    p_s = defensive_success_prob(c, t)
    attempts = rng.poisson(c.beta * t, size=n)
    successes = rng.binomial(attempts, p_s)
    return float(np.mean(successes == 0))


def defensive_series_check(c: DefensiveConfig, t, terms):
    """Partial sum of the Poisson mixture against the closed form.

    Returns (partial_sum, closed_form, gap); the gap is bounded by the
    Poisson tail mass beyond ``terms``.
    """
    if terms < 0:
        raise DomainError("terms must be nonnegative")
    p_s = defensive_success_prob(c, t)
    lam = c.beta * t
    term = math.exp(-lam)
    partial = term
    for j in range(1, terms + 1):
        term *= lam * (1.0 - p_s) / j
        partial += term
    closed = defensive_cdf(c, t)
    return partial, closed, abs(partial - closed)


@dataclass(frozen=True)
class MaxStabilityReport:
    stat: float
    critical: float
    passed: bool
    target: IWParams
    n_max: int
    reps: int
    sample_median: float
    target_median: float


def max_stability_check(p: IWParams, n_max, reps, rng) -> MaxStabilityReport:
    """Distribution check for maxima of i.i.d. IW variates.

    Draws ``reps`` maxima of ``n_max`` variates and tests them against the
    max-stable target IW(a n_max^(-1/b), b) with the known-parameters
    Anderson-Darling test at the 1% level.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if reps < 2:
        raise DomainError(f"reps must be >= 2, got {reps}")
    u = rng.random((reps, n_max))
    maxima = np.sort((1.0 / p.a) * (-np.log(u.max(axis=1))) ** (-1.0 / p.b))
    # max of n uniforms is the n-th root trick's dual: max of IW draws equals
    # the quantile at the max of the n uniforms, since the quantile is monotone
    target = IWParams(a=p.a * n_max ** (-1.0 / p.b), b=p.b)
    stat = ad_statistic(maxima, lambda t: np.exp(-(target.a * t) ** (-target.b)))
    return MaxStabilityReport(
        stat=stat, critical=AD_CRIT_1PCT, passed=stat < AD_CRIT_1PCT,
        target=target, n_max=n_max, reps=reps,
        sample_median=float(np.median(maxima)),
        target_median=iw_quantile(target, 0.5))
