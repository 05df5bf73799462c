"""The five interval methods for delta = p1 - p2 behind one interface.

Methods: Wald (WAL), Agresti-Caffo (AGC), the joint Jeffreys/fiducial
interval (JEF_FID; the two constructions coincide), the divergence-prior
interval (DIV) and the matching-prior interval (MATCH).
"""

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .deltadist import (BetaDiffModel, MatchingPosterior, diff_quantile,
                        empirical_quantile, matching_sample)
from .distributions import McConfig
from .specfun import std_normal_quantile


class Method(enum.Enum):
    WAL = "wal"
    AGC = "agc"
    JEF_FID = "jeffreys"
    DIV = "divergence"
    MATCH = "matching"

    @classmethod
    def from_cli(cls, name):
        for m in cls:
            if m.value == name:
                return m
        raise ValueError(f"unknown method {name!r}")


@dataclass(frozen=True)
class IntervalEstimate:
    method: Method
    lower: float
    upper: float
    level: float
    fallback: bool = False

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")

    @property
    def length(self):
        return self.upper - self.lower


def _check_level(level):
    if not 0.0 < level < 1.0:
        raise ValueError(f"level must lie strictly in (0, 1), got {level}")


def _wald_form(p1, n1, p2, n2, level, clip, method):
    z = std_normal_quantile(1.0 - (1.0 - level) / 2.0)
    d = p1 - p2
    half = z * math.sqrt(p1 * (1.0 - p1) / n1 + p2 * (1.0 - p2) / n2)
    lo, hi = d - half, d + half
    if clip:
        lo, hi = max(lo, -1.0), min(hi, 1.0)
    return IntervalEstimate(method=method, lower=lo, upper=hi, level=level)


def wald(c1, c2, level=0.95, clip=False):
    """Wald interval; endpoints are not clipped to [-1,1] unless asked."""
    _check_level(level)
    return _wald_form(c1.phat, c1.n, c2.phat, c2.n, level, clip, Method.WAL)


def agresti_caffo(c1, c2, level=0.95, clip=False):
    """Agresti-Caffo interval: Wald form after adding one success and one
    failure to each group."""
    _check_level(level)
    return _wald_form((c1.x + 1.0) / (c1.n + 2.0), c1.n + 2,
                      (c2.x + 1.0) / (c2.n + 2.0), c2.n + 2,
                      level, clip, Method.AGC)


def _quadrature_interval(model_for, method, c1, c2, level):
    # canonicalize group order so that swapped inputs give bitwise-negated
    # endpoints (and share the quantile-node cache)
    if (c2.x, c2.n, c1.x, c1.n) < (c1.x, c1.n, c2.x, c2.n):
        e = _quadrature_interval(model_for, method, c2, c1, level)
        return replace(e, lower=-e.upper, upper=-e.lower)
    model = model_for(c1, c2)
    alpha = 1.0 - level
    lo = diff_quantile(model, alpha / 2.0)
    hi = diff_quantile(model, 1.0 - alpha / 2.0)
    return IntervalEstimate(method=method, lower=lo, upper=hi, level=level)


def jeffreys_fiducial(c1, c2, level=0.95):
    """Equal-tailed interval of the Jeffreys posterior / fiducial quantity
    for delta (a single computation; the two constructions coincide)."""
    _check_level(level)
    return _quadrature_interval(BetaDiffModel.jeffreys, Method.JEF_FID, c1, c2, level)


def divergence(c1, c2, level=0.95):
    """Equal-tailed interval of the divergence-prior posterior for delta."""
    _check_level(level)
    return _quadrature_interval(BetaDiffModel.divergence, Method.DIV, c1, c2, level)


def matching(c1, c2, level=0.95, cfg=McConfig(), stream=0):
    """Equal-tailed interval of the matching-prior posterior for delta.

    Edge cells (x_i in {0, n_i}) make the posterior improper; those inputs
    are rerouted to the Jeffreys/fiducial interval with fallback=True.
    """
    _check_level(level)
    interior = 1 <= c1.x <= c1.n - 1 and 1 <= c2.x <= c2.n - 1
    if not interior:
        e = jeffreys_fiducial(c1, c2, level)
        return replace(e, method=Method.MATCH, fallback=True)
    draws = matching_sample(MatchingPosterior(c1, c2), cfg, stream)
    delta = np.sort(draws.pairs[:, 0] - draws.pairs[:, 1])
    alpha = 1.0 - level
    lo = float(empirical_quantile(delta, alpha / 2.0))
    hi = float(empirical_quantile(delta, 1.0 - alpha / 2.0))
    return IntervalEstimate(method=Method.MATCH, lower=lo, upper=hi, level=level)


def compute(method, c1, c2, level=0.95, cfg=McConfig(), stream=0, clip=False):
    """Dispatch a Method tag to its implementation."""
    if method is Method.WAL:
        return wald(c1, c2, level, clip)
    if method is Method.AGC:
        return agresti_caffo(c1, c2, level, clip)
    if method is Method.JEF_FID:
        return jeffreys_fiducial(c1, c2, level)
    if method is Method.DIV:
        return divergence(c1, c2, level)
    if method is Method.MATCH:
        return matching(c1, c2, level, cfg, stream)
    raise ValueError(f"unknown method {method!r}")
