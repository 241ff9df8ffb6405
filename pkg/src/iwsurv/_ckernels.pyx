# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``iwsurv._kernels_py``.

Same algorithms, same brackets, same simplex constants; plain C loops instead
of numpy array expressions. Selected automatically by ``iwsurv.kernels`` when
the extension has been built.
"""

import numpy as np

from libc.math cimport exp, log, log1p, fabs, sqrt, NAN

BACKEND_NAME = "compiled"

cdef double WEIBULL_SHAPE_LO = 1e-3
cdef double WEIBULL_SHAPE_HI = 1e3
cdef double LL_GAMMA_MIN = 0.5
cdef double LL_GAMMA_MAX = 50.0
cdef double EPS = 2.220446049250313e-16


# ---------------------------------------------------------------- weibull ---

cdef double _profile(double v, double* logx, double* d, Py_ssize_t n,
                     double mean_logx) noexcept nogil:
    cdef double s0 = 0.0, s1 = 0.0, w
    cdef Py_ssize_t i
    for i in range(n):
        w = exp(v * d[i])
        s0 += w
        s1 += w * logx[i]
    return s1 / s0 - 1.0 / v - mean_logx


cdef double _brent_profile(double lo, double hi, double flo, double fhi,
                           double* logx, double* d, Py_ssize_t n,
                           double mean_logx, double tol) noexcept nogil:
    # classic Brent iteration, mirrors numerics.find_root
    cdef double a = lo, b = hi, c = lo
    cdef double fa = flo, fb = fhi, fc = flo
    cdef double dd = b - a, e = b - a
    cdef double tol1, xm, s, p, q, r, mn
    cdef int it
    for it in range(200):
        if (fb > 0.0) == (fc > 0.0):
            c = a; fc = fa
            dd = b - a; e = dd
        if fabs(fc) < fabs(fb):
            a = b; b = c; c = a
            fa = fb; fb = fc; fc = fa
        tol1 = 2.0 * EPS * fabs(b) + 0.5 * tol
        xm = 0.5 * (c - b)
        if fabs(xm) <= tol1 or fb == 0.0:
            return b
        if fabs(e) >= tol1 and fabs(fa) > fabs(fb):
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
            p = fabs(p)
            mn = fabs(e * q)
            if 3.0 * xm * q - fabs(tol1 * q) < mn:
                mn = 3.0 * xm * q - fabs(tol1 * q)
            if 2.0 * p < mn:
                e = dd
                dd = p / q
            else:
                dd = xm
                e = dd
        else:
            dd = xm
            e = dd
        a = b; fa = fb
        if fabs(dd) > tol1:
            b += dd
        elif xm > 0.0:
            b += tol1
        else:
            b -= tol1
        fb = _profile(b, logx, d, n, mean_logx)
    return b


def fit_weibull(x):
    """Weibull MLE (u, v, ok) by the one-dimensional profile equation."""
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0], i
    logx_arr = np.empty(n, dtype=np.float64)
    d_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] logx = logx_arr
    cdef double[::1] d = d_arr
    cdef double mean_logx = 0.0, shift, flo, fhi, v, s0, u
    for i in range(n):
        logx[i] = log(xv[i])
        mean_logx += logx[i]
    mean_logx /= n
    shift = logx[0]
    for i in range(1, n):
        if logx[i] > shift:
            shift = logx[i]
    for i in range(n):
        d[i] = logx[i] - shift
    flo = _profile(WEIBULL_SHAPE_LO, &logx[0], &d[0], n, mean_logx)
    fhi = _profile(WEIBULL_SHAPE_HI, &logx[0], &d[0], n, mean_logx)
    if flo == 0.0:
        v = WEIBULL_SHAPE_LO
    elif fhi == 0.0:
        v = WEIBULL_SHAPE_HI
    elif (flo > 0.0) == (fhi > 0.0):
        return NAN, NAN, False
    else:
        v = _brent_profile(WEIBULL_SHAPE_LO, WEIBULL_SHAPE_HI, flo, fhi,
                           &logx[0], &d[0], n, mean_logx, 1e-12)
    s0 = 0.0
    for i in range(n):
        s0 += exp(v * d[i])
    u = exp(shift + log(s0 / n) / v)
    return u, v, True


def fit_iw(t):
    """Inverse Weibull MLE (a, b, ok): Weibull MLE on the reciprocal data."""
    arr = np.ascontiguousarray(t, dtype=np.float64)
    return fit_weibull(1.0 / arr)


# ----------------------------------------------------------- log-logistic ---

cdef double _ll_negloglik(double ln_sigma, double ln_gamma, double* logt,
                          Py_ssize_t n, double sum_logt) noexcept nogil:
    cdef double g = exp(ln_gamma)
    cdef double sp = 0.0, z
    cdef Py_ssize_t i
    for i in range(n):
        z = g * (logt[i] - ln_sigma)
        if z > 0.0:
            sp += z + log1p(exp(-z))
        else:
            sp += log1p(exp(z))
    return -(n * (ln_gamma - ln_sigma)
             + (g - 1.0) * (sum_logt - n * ln_sigma) - 2.0 * sp)


def fit_ll(t, double tol=1e-10):
    """Log-Logistic MLE (sigma, gamma, ok) by Nelder-Mead in log coordinates."""
    cdef const double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0], i, j, k, worst
    logt_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] logt = logt_arr
    cdef double mean = 0.0, var = 0.0, sum_logt = 0.0
    cdef double median, gamma0, sdev

    for i in range(n):
        mean += tv[i]
    mean /= n
    for i in range(n):
        var += (tv[i] - mean) * (tv[i] - mean)
        logt[i] = log(tv[i])
        sum_logt += logt[i]
    if n < 2 or var == 0.0:
        return NAN, NAN, False
    sdev = sqrt(var / (n - 1))

    ts = np.sort(np.asarray(t, dtype=np.float64))
    if n % 2:
        median = ts[n // 2]
    else:
        median = 0.5 * (ts[n // 2 - 1] + ts[n // 2])
    gamma0 = 1.8 * mean / sdev
    if gamma0 < LL_GAMMA_MIN:
        gamma0 = LL_GAMMA_MIN
    elif gamma0 > LL_GAMMA_MAX:
        gamma0 = LL_GAMMA_MAX

    # Nelder-Mead on (ln sigma, ln gamma); constants match numerics.maximize
    cdef double sim[3][2]
    cdef double fsim[3]
    cdef double centroid[2]
    cdef double xr[2]
    cdef double xe[2]
    cdef double xc[2]
    cdef double fr, fe, fc_, xatol, tmp0, tmp1, ftmp, spread
    cdef int nfev, max_fevals = 10000
    cdef bint ok = False

    sim[0][0] = log(median)
    sim[0][1] = log(gamma0)
    for i in range(2):
        sim[i + 1][0] = sim[0][0]
        sim[i + 1][1] = sim[0][1]
        if sim[i + 1][i] != 0.0:
            sim[i + 1][i] *= 1.05
        else:
            sim[i + 1][i] = 0.00025
    for i in range(3):
        fsim[i] = _ll_negloglik(sim[i][0], sim[i][1], &logt[0], n, sum_logt)
    nfev = 3
    xatol = 10.0 * tol

    while nfev < max_fevals:
        # stable insertion sort of the 3 vertices by objective value
        for j in range(1, 3):
            tmp0 = sim[j][0]; tmp1 = sim[j][1]; ftmp = fsim[j]
            k = j
            while k > 0 and fsim[k - 1] > ftmp:
                sim[k][0] = sim[k - 1][0]; sim[k][1] = sim[k - 1][1]
                fsim[k] = fsim[k - 1]
                k -= 1
            sim[k][0] = tmp0; sim[k][1] = tmp1; fsim[k] = ftmp
        spread = fabs(sim[1][0] - sim[0][0])
        if fabs(sim[1][1] - sim[0][1]) > spread:
            spread = fabs(sim[1][1] - sim[0][1])
        if fabs(sim[2][0] - sim[0][0]) > spread:
            spread = fabs(sim[2][0] - sim[0][0])
        if fabs(sim[2][1] - sim[0][1]) > spread:
            spread = fabs(sim[2][1] - sim[0][1])
        if spread <= xatol and fsim[2] - fsim[0] <= tol * (1.0 + fabs(fsim[0])):
            ok = True
            break
        centroid[0] = 0.5 * (sim[0][0] + sim[1][0])
        centroid[1] = 0.5 * (sim[0][1] + sim[1][1])
        xr[0] = centroid[0] + (centroid[0] - sim[2][0])
        xr[1] = centroid[1] + (centroid[1] - sim[2][1])
        fr = _ll_negloglik(xr[0], xr[1], &logt[0], n, sum_logt)
        nfev += 1
        if fr < fsim[0]:
            xe[0] = centroid[0] + 2.0 * (xr[0] - centroid[0])
            xe[1] = centroid[1] + 2.0 * (xr[1] - centroid[1])
            fe = _ll_negloglik(xe[0], xe[1], &logt[0], n, sum_logt)
            nfev += 1
            if fe < fr:
                sim[2][0] = xe[0]; sim[2][1] = xe[1]; fsim[2] = fe
            else:
                sim[2][0] = xr[0]; sim[2][1] = xr[1]; fsim[2] = fr
        elif fr < fsim[1]:
            sim[2][0] = xr[0]; sim[2][1] = xr[1]; fsim[2] = fr
        else:
            if fr < fsim[2]:
                xc[0] = centroid[0] + 0.5 * (xr[0] - centroid[0])
                xc[1] = centroid[1] + 0.5 * (xr[1] - centroid[1])
            else:
                xc[0] = centroid[0] - 0.5 * (centroid[0] - sim[2][0])
                xc[1] = centroid[1] - 0.5 * (centroid[1] - sim[2][1])
            fc_ = _ll_negloglik(xc[0], xc[1], &logt[0], n, sum_logt)
            nfev += 1
            if fc_ < fr and fc_ < fsim[2]:
                sim[2][0] = xc[0]; sim[2][1] = xc[1]; fsim[2] = fc_
            else:
                for i in range(1, 3):
                    sim[i][0] = sim[0][0] + 0.5 * (sim[i][0] - sim[0][0])
                    sim[i][1] = sim[0][1] + 0.5 * (sim[i][1] - sim[0][1])
                    fsim[i] = _ll_negloglik(sim[i][0], sim[i][1],
                                            &logt[0], n, sum_logt)
                nfev += 2

    worst = 0
    for i in range(1, 3):
        if fsim[i] < fsim[worst]:
            worst = i
    return exp(sim[worst][0]), exp(sim[worst][1]), ok


# ------------------------------------------------------------- statistics ---

cdef double _ad_from_sorted_cdf(double* z, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0, zi, zr
    cdef Py_ssize_t i
    for i in range(n):
        zi = z[i]
        if zi < 1e-15:
            zi = 1e-15
        elif zi > 1.0 - 1e-15:
            zi = 1.0 - 1e-15
        zr = z[n - 1 - i]
        if zr < 1e-15:
            zr = 1e-15
        elif zr > 1.0 - 1e-15:
            zr = 1.0 - 1e-15
        acc += (2.0 * (i + 1) - 1.0) * (log(zi) + log1p(-zr))
    return -n - acc / n


def ad_iw(t_sorted, double a, double b):
    cdef const double[::1] tv = np.ascontiguousarray(t_sorted, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0], i
    z_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] z = z_arr
    for i in range(n):
        z[i] = exp(-exp(-b * log(a * tv[i])))
    return _ad_from_sorted_cdf(&z[0], n)


def ad_ll(t_sorted, double sigma, double gamma):
    cdef const double[::1] tv = np.ascontiguousarray(t_sorted, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0], i
    z_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] z = z_arr
    cdef double ls = log(sigma)
    for i in range(n):
        z[i] = 1.0 / (1.0 + exp(-gamma * (log(tv[i]) - ls)))
    return _ad_from_sorted_cdf(&z[0], n)


def loglik_iw(t, double a, double b):
    cdef const double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0], i
    cdef double acc = n * log(a * b), lat
    for i in range(n):
        lat = log(a * tv[i])
        acc += -(b + 1.0) * lat - exp(-b * lat)
    return acc


def loglik_ll(t, double sigma, double gamma):
    cdef const double[::1] tv = np.ascontiguousarray(t, dtype=np.float64)
    cdef Py_ssize_t n = tv.shape[0], i
    logt_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] logt = logt_arr
    cdef double sum_logt = 0.0
    for i in range(n):
        logt[i] = log(tv[i])
        sum_logt += logt[i]
    return -_ll_negloglik(log(sigma), log(gamma), &logt[0], n, sum_logt)


def replicate_battery(t_sorted):
    """Fit both candidate families and score one replicate."""
    cdef double a, b, sigma, gamma
    cdef double stat_iw = NAN, stat_ll = NAN, mll_iw = NAN, mll_ll = NAN
    a, b, iw_ok = fit_iw(t_sorted)
    sigma, gamma, ll_ok = fit_ll(t_sorted)
    if iw_ok:
        stat_iw = ad_iw(t_sorted, a, b)
        mll_iw = loglik_iw(t_sorted, a, b)
    if ll_ok:
        stat_ll = ad_ll(t_sorted, sigma, gamma)
        mll_ll = loglik_ll(t_sorted, sigma, gamma)
    return a, b, sigma, gamma, stat_iw, stat_ll, mll_iw, mll_ll, iw_ok, ll_ok
