"""Distribution of delta = p1 - p2 for the implemented posterior models.

Two computational routes:

* product-of-betas models (fiducial / Jeffreys / divergence): deterministic
  composite Gauss-Legendre quadrature for the CDF
  H(d) = integral_0^1 F_left(clamp(d + Q_right(t), 0, 1)) dt,
  inverted by bisection.  Substituting the right-margin quantile removes
  the endpoint density singularities of shapes < 1.
* matching-prior posterior: exact rejection sampling with empirical
  quantiles.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .distributions import BetaParams, Counts, generator

_LEVELS = 8        # dyadic grading depth of the cached grid
_SPLIT_GRADE = 7   # grading depth of the per-evaluation kink-split rule
_NODES_PER_PANEL = 64


@lru_cache(maxsize=8)
def _gl_grid(levels):
    # composite Gauss-Legendre rule on [0,1] with panel edges graded
    # dyadically toward both endpoints (0, 2^-levels, ..., 1/2, ...,
    # 1 - 2^-levels, 1): the quantile substitution leaves steep boundary
    # layers at t -> 0, 1 that uniform panels resolve poorly.  Weights
    # sum to 1.
    x, w = np.polynomial.legendre.leggauss(_NODES_PER_PANEL)
    edges = ([0.0] + [2.0 ** -k for k in range(levels, 1, -1)] + [0.5]
             + [1.0 - 2.0 ** -k for k in range(2, levels + 1)] + [1.0])
    nodes = []
    weights = []
    for lo, hi in zip(edges, edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(lo + half * (x + 1.0))
        weights.append(half * w)
    return (np.ascontiguousarray(np.concatenate(nodes)),
            np.ascontiguousarray(np.concatenate(weights)))


@lru_cache(maxsize=4096)
def _right_quantile_nodes(a, b, levels):
    nodes, _ = _gl_grid(levels)
    out = np.empty_like(nodes)
    for i, t in enumerate(nodes):
        out[i] = kernels.inv_reg_inc_beta(t, a, b)
    return np.ascontiguousarray(out)


@dataclass(frozen=True)
class BetaDiffModel:
    """delta = B_left - B_right with independent beta margins."""

    left: BetaParams
    right: BetaParams

    @classmethod
    def jeffreys(cls, c1, c2):
        """Jeffreys-posterior margins Beta(x+1/2, n-x+1/2); identical to the
        fiducial margins, so fiducial and Jeffreys intervals share this model."""
        return cls(BetaParams(c1.x + 0.5, c1.n - c1.x + 0.5),
                   BetaParams(c2.x + 0.5, c2.n - c2.x + 0.5))

    @classmethod
    def divergence(cls, c1, c2):
        """Divergence-posterior margins Beta(x+3/4, n-x+3/4)."""
        return cls(BetaParams(c1.x + 0.75, c1.n - c1.x + 0.75),
                   BetaParams(c2.x + 0.75, c2.n - c2.x + 0.75))


def _singular(margin):
    return margin.a < 1.0 or margin.b < 1.0


def _route(model):
    """Orientation to integrate: (model, reflected?).

    Right-margin singularities are absorbed by the quantile substitution,
    but a left-margin shape < 1 puts a fractional-power kink in the
    integrand where d + Q_right(t) crosses 0 or 1.  When only the left
    margin is singular, integrating the reflected difference
    P(R - L <= -d) = 1 - P(L - R <= d) moves the singular margin to the
    substituted side and restores a smooth integrand.  Models singular in
    both margins keep the kink in either orientation and take the
    kink-split rule instead.
    """
    if _singular(model.left) and not _singular(model.right):
        return BetaDiffModel(model.right, model.left), True
    return model, False


def _kink_split_cdf(model, d, grade):
    """CDF route for models whose margins are both singular.

    The t-integral is split exactly at the clamp crossings
    t0 = F_right(-d) and t1 = F_right(1 - d): below t0 the integrand is 0,
    above t1 it is 1 (contributing 1 - t1 exactly), and on [t0, t1] it has
    fractional-power behaviour at both ends, so the panels of the graded
    unit grid are mapped onto [t0, t1].  Quantile nodes depend on d here,
    so they are computed per evaluation rather than cached.
    """
    a1, b1 = model.left.a, model.left.b
    a2, b2 = model.right.a, model.right.b
    t0 = kernels.reg_inc_beta(min(max(-d, 0.0), 1.0), a2, b2)
    t1 = kernels.reg_inc_beta(min(max(1.0 - d, 0.0), 1.0), a2, b2)
    h = 1.0 - t1
    if t1 > t0:
        nodes, weights = _gl_grid(grade)
        width = t1 - t0
        for i in range(len(weights)):
            u = d + kernels.inv_reg_inc_beta(t0 + width * nodes[i], a2, b2)
            if u <= 0.0:
                continue
            if u >= 1.0:
                h += width * weights[i]
            else:
                h += width * weights[i] * kernels.reg_inc_beta(u, a1, b1)
    return min(max(h, 0.0), 1.0)


def diff_cdf(model, d, levels=None):
    """P(delta <= d) for a product-of-betas model; abs error <= 1e-6."""
    if d <= -1.0:
        return 0.0
    if d >= 1.0:
        return 1.0
    if _singular(model.left) and _singular(model.right):
        return _kink_split_cdf(model, float(d),
                               _SPLIT_GRADE if levels is None else levels)
    m, reflected = _route(model)
    dd = -float(d) if reflected else float(d)
    if levels is None:
        levels = _LEVELS
    rq = _right_quantile_nodes(m.right.a, m.right.b, levels)
    _, w = _gl_grid(levels)
    h = kernels.diff_cdf_nodes(dd, m.left.a, m.left.b, rq, w)
    if reflected:
        h = 1.0 - h
    return min(max(h, 0.0), 1.0)


def diff_cdf_error(model, d):
    """Quadrature error estimate: |H at the base rule - H one grade finer|."""
    if _singular(model.left) and _singular(model.right):
        base, finer = _SPLIT_GRADE, _SPLIT_GRADE + 1
    else:
        base, finer = _LEVELS, _LEVELS + 2
    return abs(diff_cdf(model, d, levels=base)
               - diff_cdf(model, d, levels=finer))


def diff_quantile(model, q):
    """d with |H(d) - q| <= 1e-6, by bisection to bracket width 1e-8."""
    if not 0.0 < q < 1.0:
        raise ValueError(f"q must lie strictly in (0, 1), got {q}")
    q = float(q)
    if _singular(model.left) and _singular(model.right):
        lo, hi = -1.0, 1.0
        for _ in range(28):
            mid = 0.5 * (lo + hi)
            if _kink_split_cdf(model, mid, _SPLIT_GRADE) < q:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)
    m, reflected = _route(model)
    rq = _right_quantile_nodes(m.right.a, m.right.b, _LEVELS)
    _, w = _gl_grid(_LEVELS)
    if reflected:
        return -kernels.diff_quantile_nodes(1.0 - q, m.left.a, m.left.b, rq, w)
    return kernels.diff_quantile_nodes(q, m.left.a, m.left.b, rq, w)


@dataclass(frozen=True)
class MatchingPosterior:
    """Joint posterior of (p1, p2) under the probability matching prior.

    Only defined for interior counts 1 <= x_i <= n_i - 1; at edge counts the
    kernel p^(x-1) (1-p)^(n-x-1) is non-integrable and callers must route to
    a fallback method instead.
    """

    counts1: Counts
    counts2: Counts

    def __post_init__(self):
        for c in (self.counts1, self.counts2):
            if not 1 <= c.x <= c.n - 1:
                raise ValueError(
                    f"matching posterior needs interior counts, got x={c.x}, n={c.n}")


@dataclass(frozen=True)
class MatchingDraws:
    """Retained (p1, p2) pairs plus the raw rejection-sampler tallies.

    ``pairs`` is truncated to the requested sample count; ``accepted`` and
    ``proposals`` count every accepted draw and every proposal over the
    whole-batch loop, so ``accepted / proposals`` is an unbiased estimate of
    the acceptance rate.
    """

    pairs: np.ndarray
    accepted: int
    proposals: int


_BATCH = 1 << 16
_ACCEPT_NORM = math.sqrt(0.5)  # envelope: p(1-p) <= 1/4 per group, sum <= 1/2


def matching_sample(post, cfg, stream):
    """Exact i.i.d. draws from the matching posterior by rejection.

    Proposals come from Beta(x1, n1-x1) x Beta(x2, n2-x2); a pair is
    accepted with probability sqrt(p1(1-p1) + p2(1-p2)) / sqrt(1/2).

    Each group's proposal stream is keyed by its own counts (the smaller
    (x, n) pair, lexicographically, always uses lane 1), so swapping the
    two groups swaps the accepted coordinates exactly.
    """
    c1, c2 = post.counts1, post.counts2
    if (c1.x, c1.n) <= (c2.x, c2.n):
        lane1, lane2 = 1, 2
    else:
        lane1, lane2 = 2, 1
    g1 = generator(cfg.seed, stream, lane1)
    g2 = generator(cfg.seed, stream, lane2)
    gu = generator(cfg.seed, stream, 0)

    chunks = []
    accepted = 0
    proposals = 0
    while accepted < cfg.samples:
        a1 = g1.standard_gamma(c1.x, size=_BATCH)
        b1 = g1.standard_gamma(c1.n - c1.x, size=_BATCH)
        a2 = g2.standard_gamma(c2.x, size=_BATCH)
        b2 = g2.standard_gamma(c2.n - c2.x, size=_BATCH)
        p1 = a1 / (a1 + b1)
        p2 = a2 / (a2 + b2)
        u = gu.uniform(size=_BATCH)
        keep = u * _ACCEPT_NORM < np.sqrt(p1 * (1.0 - p1) + p2 * (1.0 - p2))
        chunks.append(np.column_stack((p1[keep], p2[keep])))
        accepted += int(keep.sum())
        proposals += _BATCH
    pairs = np.concatenate(chunks)[:cfg.samples]
    return MatchingDraws(pairs=pairs, accepted=accepted, proposals=proposals)


def empirical_quantile(samples, q):
    """Order-statistic quantile: 1-based index clamp(ceil(q*N), 1, N)."""
    n = len(samples)
    if n == 0:
        raise ValueError("empirical_quantile needs a nonempty sample")
    idx = min(max(math.ceil(q * n), 1), n)
    return samples[idx - 1]
