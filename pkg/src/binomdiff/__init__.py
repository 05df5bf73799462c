"""Intervals for the difference of two binomial proportions.

Five interval methods (Wald, Agresti-Caffo, Jeffreys/fiducial, divergence
prior, probability matching prior) plus an exact-enumeration coverage
engine.  Hot numerical kernels run in a compiled extension when available,
with a pure-Python fallback (see :mod:`binomdiff.kernels`).
"""

from .kernels import BACKEND
from .distributions import BetaParams, Counts, McConfig, beta_quantile, beta_sample, binom_pmf
from .deltadist import (BetaDiffModel, MatchingPosterior, diff_cdf, diff_quantile,
                        empirical_quantile, matching_sample)
from .intervals import (IntervalEstimate, Method, agresti_caffo, compute,
                        divergence, jeffreys_fiducial, matching, wald)
from .coverage import CoverageResult, Scenario, exact_coverage, grid_average, table_sweep

__all__ = [
    "BACKEND",
    "BetaDiffModel", "BetaParams", "Counts", "CoverageResult",
    "IntervalEstimate", "MatchingPosterior", "McConfig", "Method", "Scenario",
    "agresti_caffo", "beta_quantile", "beta_sample", "binom_pmf", "compute",
    "diff_cdf", "diff_quantile", "divergence", "empirical_quantile",
    "exact_coverage", "grid_average", "jeffreys_fiducial", "matching",
    "matching_sample", "table_sweep", "wald",
]

__version__ = "0.1.0"
