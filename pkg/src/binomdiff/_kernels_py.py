"""Pure-Python numerical kernels.

Fallback lane for the compiled extension in ``_kernels_cy``; the two must
implement the same functions with the same semantics.  Inputs are assumed
validated by the public wrappers in :mod:`binomdiff.specfun` and
:mod:`binomdiff.deltadist`.
"""

import math

_MAXIT = 300
_EPS = 3.0e-16
_FPMIN = 1.0e-300


def log_gamma(x):
    """ln Gamma(x) for x > 0 (libm lgamma, ~1 ulp)."""
    return math.lgamma(x)


def _betacf(a, b, x):
    # Lentz's continued fraction for the incomplete beta, as in
    # Numerical Recipes.  Converges for x < (a+1)/(a+b+2).
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return h


def reg_inc_beta(x, a, b):
    """Regularized incomplete beta I_x(a,b), the Beta(a,b) CDF at x."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (log_gamma(a + b) - log_gamma(a) - log_gamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    # symmetry switch keeps the continued fraction in its convergent region
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def inv_reg_inc_beta(q, a, b):
    """x with I_x(a,b) = q, by bracketed bisection with Newton refinement.

    The bracket (lo, hi) never leaves [0,1]; Newton steps that would escape
    it fall back to the midpoint, so unbounded densities at the endpoints
    (shapes < 1) cannot derail the iteration.
    """
    lo = 0.0
    hi = 1.0
    lbeta = log_gamma(a + b) - log_gamma(a) - log_gamma(b)
    x = a / (a + b)
    for _ in range(200):
        f = reg_inc_beta(x, a, b) - q
        if f > 0.0:
            hi = x
        else:
            lo = x
        if abs(f) <= 1.0e-14 or hi - lo <= 1.0e-16:
            break
        xn = 0.5 * (lo + hi)
        logpdf = lbeta + (a - 1.0) * math.log(x) + (b - 1.0) * math.log1p(-x)
        if logpdf > -700.0:
            step = f * math.exp(-logpdf)
            cand = x - step
            if lo < cand < hi:
                xn = cand
        if xn == x:
            break
        x = xn
    return x


# Rational approximation for the standard normal quantile (P. Acklam),
# refined by one Halley step against erfc.
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)

_SQRT2 = math.sqrt(2.0)
_SQRT2PI = math.sqrt(2.0 * math.pi)


def std_normal_quantile(q):
    """z with Phi(z) = q, for 0 < q < 1.

    The upper tail is reflected through the lower one (Phi is symmetric);
    the lower-tail erfc refinement is relatively accurate where the upper
    tail one would cancel.
    """
    if q > 0.5:
        return -_std_normal_quantile_half(1.0 - q)
    return _std_normal_quantile_half(q)


def _std_normal_quantile_half(q):
    p_low = 0.02425
    if q < p_low:
        u = math.sqrt(-2.0 * math.log(q))
        x = (((((_C[0] * u + _C[1]) * u + _C[2]) * u + _C[3]) * u + _C[4]) * u + _C[5]) / \
            ((((_D[0] * u + _D[1]) * u + _D[2]) * u + _D[3]) * u + 1.0)
    elif q <= 1.0 - p_low:
        u = q - 0.5
        r = u * u
        x = (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * u / \
            (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0)
    else:
        u = math.sqrt(-2.0 * math.log1p(-q))
        x = -(((((_C[0] * u + _C[1]) * u + _C[2]) * u + _C[3]) * u + _C[4]) * u + _C[5]) / \
            ((((_D[0] * u + _D[1]) * u + _D[2]) * u + _D[3]) * u + 1.0)
    # Halley refinement
    e = 0.5 * math.erfc(-x / _SQRT2) - q
    u = e * _SQRT2PI * math.exp(0.5 * x * x)
    return x - u / (1.0 + 0.5 * x * u)


def diff_cdf_nodes(d, a, b, right_q, weights):
    """Quadrature sum for P(B_left - B_right <= d).

    ``right_q`` holds the right-margin quantile Q_right(t_i) at the
    Gauss-Legendre nodes t_i of [0,1]; ``weights`` the matching weights
    (summing to 1).  The left margin is Beta(a, b).
    """
    s = 0.0
    for i in range(len(weights)):
        u = d + right_q[i]
        if u <= 0.0:
            continue
        if u >= 1.0:
            s += weights[i]
        else:
            s += weights[i] * reg_inc_beta(u, a, b)
    return s


def diff_quantile_nodes(q, a, b, right_q, weights):
    """Bisection inverse of diff_cdf_nodes on [-1, 1], to bracket width 1e-8."""
    lo = -1.0
    hi = 1.0
    for _ in range(28):
        mid = 0.5 * (lo + hi)
        if diff_cdf_nodes(mid, a, b, right_q, weights) < q:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
