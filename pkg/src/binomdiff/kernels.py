"""Backend selection for the numerical kernels.

Prefers the compiled extension (``_kernels_cy``); falls back to the
pure-Python lane when the extension is unavailable or when the environment
variable ``BINOMDIFF_PURE_PYTHON`` is set (useful for debugging and for the
backend benchmark).
"""

import os

if os.environ.get("BINOMDIFF_PURE_PYTHON"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "python"

log_gamma = _impl.log_gamma
reg_inc_beta = _impl.reg_inc_beta
inv_reg_inc_beta = _impl.inv_reg_inc_beta
std_normal_quantile = _impl.std_normal_quantile
diff_cdf_nodes = _impl.diff_cdf_nodes
diff_quantile_nodes = _impl.diff_quantile_nodes
