# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled numerical kernels.

Mirror of ``_kernels_py``; same functions, same semantics, C speed.
"""

from libc.math cimport lgamma, log, log1p, exp, fabs, sqrt, erfc, M_PI

cdef double _EPS = 3.0e-16
cdef double _FPMIN = 1.0e-300
cdef int _MAXIT = 300


def log_gamma(double x):
    """ln Gamma(x) for x > 0 (libm lgamma, ~1 ulp)."""
    return lgamma(x)


cdef double _betacf(double a, double b, double x) nogil:
    cdef double qab = a + b
    cdef double qap = a + 1.0
    cdef double qam = a - 1.0
    cdef double c = 1.0
    cdef double d = 1.0 - qab * x / qap
    cdef double h, aa, delta
    cdef int m, m2
    if fabs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if fabs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if fabs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if fabs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if fabs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if fabs(delta - 1.0) < _EPS:
            break
    return h


cdef double _reg_inc_beta(double x, double a, double b) nogil:
    cdef double ln_front, front
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (lgamma(a + b) - lgamma(a) - lgamma(b)
                + a * log(x) + b * log1p(-x))
    front = exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def reg_inc_beta(double x, double a, double b):
    """Regularized incomplete beta I_x(a,b), the Beta(a,b) CDF at x."""
    return _reg_inc_beta(x, a, b)


cdef double _inv_reg_inc_beta(double q, double a, double b) nogil:
    cdef double lo = 0.0
    cdef double hi = 1.0
    cdef double lbeta = lgamma(a + b) - lgamma(a) - lgamma(b)
    cdef double x = a / (a + b)
    cdef double f, xn, logpdf, step, cand
    cdef int i
    for i in range(200):
        f = _reg_inc_beta(x, a, b) - q
        if f > 0.0:
            hi = x
        else:
            lo = x
        if fabs(f) <= 1.0e-14 or hi - lo <= 1.0e-16:
            break
        xn = 0.5 * (lo + hi)
        logpdf = lbeta + (a - 1.0) * log(x) + (b - 1.0) * log1p(-x)
        if logpdf > -700.0:
            step = f * exp(-logpdf)
            cand = x - step
            if lo < cand < hi:
                xn = cand
        if xn == x:
            break
        x = xn
    return x


def inv_reg_inc_beta(double q, double a, double b):
    """x with I_x(a,b) = q, bracketed bisection with Newton refinement."""
    return _inv_reg_inc_beta(q, a, b)


def std_normal_quantile(double q):
    """z with Phi(z) = q, for 0 < q < 1 (Acklam approximation + Halley step).

    The upper tail is reflected through the lower one for symmetry."""
    if q > 0.5:
        return -_std_normal_quantile_half(1.0 - q)
    return _std_normal_quantile_half(q)


cdef double _std_normal_quantile_half(double q):
    cdef double p_low = 0.02425
    cdef double u, r, x, e
    if q < p_low:
        u = sqrt(-2.0 * log(q))
        x = (((((-7.784894002430293e-03 * u - 3.223964580411365e-01) * u
                - 2.400758277161838e+00) * u - 2.549732539343734e+00) * u
              + 4.374664141464968e+00) * u + 2.938163982698783e+00) / \
            ((((7.784695709041462e-03 * u + 3.224671290700398e-01) * u
               + 2.445134137142996e+00) * u + 3.754408661907416e+00) * u + 1.0)
    elif q <= 1.0 - p_low:
        u = q - 0.5
        r = u * u
        x = (((((-3.969683028665376e+01 * r + 2.209460984245205e+02) * r
                - 2.759285104469687e+02) * r + 1.383577518672690e+02) * r
              - 3.066479806614716e+01) * r + 2.506628277459239e+00) * u / \
            (((((-5.447609879822406e+01 * r + 1.615858368580409e+02) * r
                - 1.556989798598866e+02) * r + 6.680131188771972e+01) * r
              - 1.328068155288572e+01) * r + 1.0)
    else:
        u = sqrt(-2.0 * log1p(-q))
        x = -(((((-7.784894002430293e-03 * u - 3.223964580411365e-01) * u
                 - 2.400758277161838e+00) * u - 2.549732539343734e+00) * u
               + 4.374664141464968e+00) * u + 2.938163982698783e+00) / \
            ((((7.784695709041462e-03 * u + 3.224671290700398e-01) * u
               + 2.445134137142996e+00) * u + 3.754408661907416e+00) * u + 1.0)
    e = 0.5 * erfc(-x / sqrt(2.0)) - q
    u = e * sqrt(2.0 * M_PI) * exp(0.5 * x * x)
    return x - u / (1.0 + 0.5 * x * u)


cdef double _diff_cdf_nodes(double d, double a, double b,
                            double[::1] right_q, double[::1] weights) nogil:
    cdef double s = 0.0
    cdef double u
    cdef Py_ssize_t i
    for i in range(weights.shape[0]):
        u = d + right_q[i]
        if u <= 0.0:
            continue
        if u >= 1.0:
            s += weights[i]
        else:
            s += weights[i] * _reg_inc_beta(u, a, b)
    return s


def diff_cdf_nodes(double d, double a, double b,
                   double[::1] right_q, double[::1] weights):
    """Quadrature sum for P(B_left - B_right <= d); see the Python lane."""
    return _diff_cdf_nodes(d, a, b, right_q, weights)


def diff_quantile_nodes(double q, double a, double b,
                        double[::1] right_q, double[::1] weights):
    """Bisection inverse of diff_cdf_nodes on [-1, 1], bracket width 1e-8."""
    cdef double lo = -1.0
    cdef double hi = 1.0
    cdef double mid
    cdef int i
    for i in range(28):
        mid = 0.5 * (lo + hi)
        if _diff_cdf_nodes(mid, a, b, right_q, weights) < q:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
