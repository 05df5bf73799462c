"""Special functions with input validation.

Thin public wrappers over the selected kernel backend.
"""

from . import kernels


def log_gamma(x):
    """Natural log of the gamma function, for x > 0."""
    if x <= 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return kernels.log_gamma(float(x))


def reg_inc_beta(x, a, b):
    """Regularized incomplete beta I_x(a,b): the Beta(a,b) CDF at x."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"shape parameters must be positive, got a={a}, b={b}")
    return kernels.reg_inc_beta(float(x), float(a), float(b))


def inv_reg_inc_beta(q, a, b):
    """Inverse of I_x(a,b) in x, for 0 < q < 1."""
    if not 0.0 < q < 1.0:
        raise ValueError(f"q must lie strictly in (0, 1), got {q}")
    if a <= 0.0 or b <= 0.0:
        raise ValueError(f"shape parameters must be positive, got a={a}, b={b}")
    return kernels.inv_reg_inc_beta(float(q), float(a), float(b))


def std_normal_quantile(q):
    """Standard normal quantile: z with Phi(z) = q, 0 < q < 1."""
    if not 0.0 < q < 1.0:
        raise ValueError(f"q must lie strictly in (0, 1), got {q}")
    return kernels.std_normal_quantile(float(q))
