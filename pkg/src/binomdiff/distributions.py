"""Binomial pmf, beta quantiles and seeded beta sampling.

All Monte Carlo in the package flows through the counter-based Philox
generator, keyed by a documented hash of (seed, stream, lane) so that every
outcome cell gets its own reproducible stream regardless of evaluation
order.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels

_M64 = (1 << 64) - 1


@dataclass(frozen=True)
class Counts:
    """One binomial observation: x successes out of n trials."""

    x: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 0 <= self.x <= self.n:
            raise ValueError(f"x must lie in [0, n], got x={self.x}, n={self.n}")

    @property
    def phat(self):
        return self.x / self.n


@dataclass(frozen=True)
class BetaParams:
    """Shape pair of a Beta distribution."""

    a: float
    b: float

    def __post_init__(self):
        if self.a <= 0.0 or self.b <= 0.0:
            raise ValueError(f"shapes must be positive, got a={self.a}, b={self.b}")

    @property
    def mean(self):
        return self.a / (self.a + self.b)


@dataclass(frozen=True)
class McConfig:
    """Seed and sample count for all Monte Carlo paths."""

    seed: int = 0
    samples: int = 200_000

    def __post_init__(self):
        if not 0 <= self.seed <= _M64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.samples < 1000:
            raise ValueError(f"samples must be >= 1000, got {self.samples}")


def _splitmix64(z):
    z = (z + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def derive_key(seed, stream, lane=0):
    """Philox key for a (seed, stream, lane) triple.

    The rule is fixed: key = splitmix64(splitmix64(splitmix64(seed) XOR
    stream) XOR lane).  Streams identify outcome cells (conventionally
    stream = xa*(nb+1) + xb with the cell's (x, n) pairs in lexicographic
    order, so swapped cells share a stream); lanes separate independent
    sub-streams within one cell (e.g. the two proposal margins of the
    rejection sampler).
    """
    return _splitmix64(_splitmix64(_splitmix64(seed) ^ (stream & _M64)) ^ (lane & _M64))


def generator(seed, stream, lane=0):
    """Counter-based generator for the given (seed, stream, lane)."""
    return np.random.Generator(np.random.Philox(key=derive_key(seed, stream, lane)))


def binom_pmf(k, n, p):
    """Binomial pmf C(n,k) p^k (1-p)^(n-k), evaluated in log space."""
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, n], got k={k}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if p == 0.0:
        return 1.0 if k == 0 else 0.0
    if p == 1.0:
        return 1.0 if k == n else 0.0
    # subtract the two lgamma terms in a canonical order so that
    # pmf(k, n, p) == pmf(n-k, n, 1-p) bitwise (when 1-p is exact)
    kk = min(k, n - k)
    lchoose = (kernels.log_gamma(n + 1.0) - kernels.log_gamma(kk + 1.0)
               - kernels.log_gamma(n - kk + 1.0))
    # log(1-p) rather than log1p(-p): the pmf value only needs the float
    # complement, and log() applied to both p and 1-p keeps the reflection
    # identity bitwise
    return math.exp(lchoose + (k * math.log(p) + (n - k) * math.log(1.0 - p)))


def beta_quantile(params, q):
    """Quantile of Beta(a,b) at probability q."""
    from . import specfun

    return specfun.inv_reg_inc_beta(q, params.a, params.b)


def beta_sample(params, cfg, stream, lane=0, size=None):
    """Seeded Beta(a,b) draws via two gamma deviates.

    Deterministic given (cfg.seed, stream, lane); returns cfg.samples draws
    unless ``size`` overrides the count.
    """
    n = cfg.samples if size is None else int(size)
    g = generator(cfg.seed, stream, lane)
    ga = g.standard_gamma(params.a, size=n)
    gb = g.standard_gamma(params.b, size=n)
    return ga / (ga + gb)
