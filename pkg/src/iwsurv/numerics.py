"""Special functions, bracketed root finding, and derivative-free maximization.

These are the only numerical primitives the rest of the package relies on.
The root finder and the simplex maximizer are deterministic: identical inputs
produce bit-identical outputs, which the Monte Carlo determinism contracts
build on. The compiled kernel module mirrors the same algorithms (identical
constants and update rules) in C for the hot fitting loops.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BracketError, ConvergenceError, DomainError

ROOT_TOL = 1e-12
OPT_TOL = 1e-10
MAX_FEVALS = 10_000

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class Bracket:
    """Search interval [lo, hi] enclosing a sign change of the target."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")


def ln_gamma(x):
    """log of the gamma function for x > 0."""
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _lower_gamma_series(s, x):
    # regularized P(s, x) by power series, for x < s + 1
    term = 1.0 / s
    total = term
    k = s
    for _ in range(500):
        k += 1.0
        term *= x / k
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(s * math.log(x) - x - math.lgamma(s))


def _upper_gamma_cf(s, x):
    # regularized Q(s, x) by modified Lentz continued fraction, for x >= s + 1
    tiny = 1e-300
    b = x + 1.0 - s
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h * math.exp(s * math.log(x) - x - math.lgamma(s))


def regularized_lower_gamma(s, x):
    """P(s, x) = gamma(s, x) / Gamma(s), in [0, 1]."""
    if s <= 0.0:
        raise DomainError(f"shape must be positive, got {s}")
    if x < 0.0:
        raise DomainError(f"argument must be nonnegative, got {x}")
    if x == 0.0:
        return 0.0
    # series below the diagonal, continued fraction above: both converge fast
    # and keep relative error ~1e-14 across the whole quadrant
    if x < s + 1.0:
        return _lower_gamma_series(s, x)
    return 1.0 - _upper_gamma_cf(s, x)


def lower_incomplete_gamma(s, x):
    """gamma(s, x) = integral of z**(s-1) exp(-z) over (0, x]."""
    return regularized_lower_gamma(s, x) * math.exp(math.lgamma(s))


def find_root(f, bracket, tol=ROOT_TOL):
    """Root of ``f`` inside ``bracket`` by Brent's method.

    ``bracket`` may be a :class:`Bracket` or a (lo, hi) pair with a sign
    change of ``f``. Raises :class:`BracketError` when there is none.
    """
    if not isinstance(bracket, Bracket):
        bracket = Bracket(*bracket)
    a, b = bracket.lo, bracket.hi
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise BracketError(f"no sign change on [{a}, {b}]: f(lo)={fa}, f(hi)={fb}")

    c, fc = a, fa
    d = e = b - a
    for _ in range(200):
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * _EPS * abs(b) + 0.5 * tol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = xm
                e = d
        else:
            d = xm
            e = d
        a, fa = b, fb
        if abs(d) > tol1:
            b += d
        else:
            b += tol1 if xm > 0.0 else -tol1
        fb = f(b)
    return b


def expand_bracket(f, lo, hi, grow=2.0, max_steps=200):
    """Grow [lo, hi] geometrically (upward) until f changes sign."""
    flo, fhi = f(lo), f(hi)
    for _ in range(max_steps):
        if (flo > 0.0) != (fhi > 0.0) or flo == 0.0 or fhi == 0.0:
            return Bracket(lo, hi)
        lo, flo = hi, fhi
        hi *= grow
        fhi = f(hi)
    raise BracketError(f"no sign change located up to {hi}")


# Nelder-Mead constants shared verbatim with the compiled kernels.
_REFLECT, _EXPAND, _CONTRACT, _SHRINK = 1.0, 2.0, 0.5, 0.5
_NONZDELT, _ZDELT = 0.05, 0.00025


def maximize(f, start, tol=OPT_TOL, max_fevals=MAX_FEVALS):
    """Derivative-free local maximization of ``f`` from ``start``.

    Nelder-Mead on at most 3 coordinates. Returns the best vertex (a float
    for scalar ``start``). Raises :class:`ConvergenceError` carrying the best
    point when the evaluation budget runs out first.
    """
    x0 = np.atleast_1d(np.asarray(start, dtype=float))
    scalar_in = np.ndim(start) == 0
    n = x0.size
    if n > 3:
        raise DomainError("maximize supports at most 3 dimensions")

    def neg(x):
        return -float(f(x[0]) if scalar_in else f(*x))

    f0 = neg(x0)
    if not math.isfinite(f0):
        raise DomainError("objective is not finite at the starting point")

    sim = np.empty((n + 1, n))
    sim[0] = x0
    for i in range(n):
        y = x0.copy()
        y[i] = y[i] * (1.0 + _NONZDELT) if y[i] != 0.0 else _ZDELT
        sim[i + 1] = y
    fsim = np.array([f0] + [neg(sim[i + 1]) for i in range(n)])
    nfev = n + 1

    xatol = 10.0 * tol
    while nfev < max_fevals:
        order = np.argsort(fsim, kind="stable")
        sim, fsim = sim[order], fsim[order]
        if (np.max(np.abs(sim[1:] - sim[0])) <= xatol
                and fsim[-1] - fsim[0] <= tol * (1.0 + abs(fsim[0]))):
            break
        centroid = np.mean(sim[:-1], axis=0)
        xr = centroid + _REFLECT * (centroid - sim[-1])
        fr = neg(xr)
        nfev += 1
        if fr < fsim[0]:
            xe = centroid + _EXPAND * (xr - centroid)
            fe = neg(xe)
            nfev += 1
            if fe < fr:
                sim[-1], fsim[-1] = xe, fe
            else:
                sim[-1], fsim[-1] = xr, fr
        elif fr < fsim[-2]:
            sim[-1], fsim[-1] = xr, fr
        else:
            if fr < fsim[-1]:
                xc = centroid + _CONTRACT * (xr - centroid)
            else:
                xc = centroid - _CONTRACT * (centroid - sim[-1])
            fc = neg(xc)
            nfev += 1
            if fc < min(fr, fsim[-1]):
                sim[-1], fsim[-1] = xc, fc
            else:
                for i in range(1, n + 1):
                    sim[i] = sim[0] + _SHRINK * (sim[i] - sim[0])
                    fsim[i] = neg(sim[i])
                nfev += n
    else:
        i = int(np.argmin(fsim))
        best = sim[i][0] if scalar_in else sim[i].copy()
        raise ConvergenceError(
            f"no convergence within {max_fevals} evaluations",
            best_x=best, best_f=-fsim[i])

    best = sim[0]
    return float(best[0]) if scalar_in else best.copy()
