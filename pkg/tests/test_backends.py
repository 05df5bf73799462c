"""Agreement between the compiled kernel lane and the pure-Python lane.

Both lanes implement the same algorithms with the same branch structure.
They are not bitwise identical because the pure lane goes through
``math.lgamma`` (CPython's own implementation) while the compiled lane
calls libm's ``lgamma``; the two differ by a few ulps.  Agreement is
therefore asserted at ulp-level tolerances, with inversion results allowed
their bracket/termination width.  If the compiled extension is not built,
the package still works on the pure lane and these comparisons are skipped.
"""

import numpy as np
import pytest

from binomdiff import _kernels_py as py

cy = pytest.importorskip("binomdiff._kernels_cy")

GRID_X = [1e-9, 1e-4, 0.02, 0.2, 0.5, 0.8, 0.98, 1.0 - 1e-9]
GRID_AB = [(0.5, 0.5), (0.5, 10.5), (0.75, 20.75), (1.0, 1.0),
           (3.5, 7.5), (9.5, 20.5), (150.0, 250.0)]


def test_backend_is_reported():
    from binomdiff import BACKEND

    assert BACKEND in ("cython", "python")


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.0, 9.5, 20.5, 123.456, 1e4])
def test_log_gamma_agreement(x):
    assert cy.log_gamma(x) == pytest.approx(py.log_gamma(x), rel=5e-15, abs=5e-15)


@pytest.mark.parametrize("a,b", GRID_AB)
def test_reg_inc_beta_agreement(a, b):
    for x in GRID_X:
        assert cy.reg_inc_beta(x, a, b) == \
            pytest.approx(py.reg_inc_beta(x, a, b), abs=1e-13)


@pytest.mark.parametrize("a,b", GRID_AB)
def test_inv_reg_inc_beta_agreement(a, b):
    for q in (1e-6, 0.025, 0.3, 0.5, 0.9, 0.975, 1.0 - 1e-6):
        assert cy.inv_reg_inc_beta(q, a, b) == \
            pytest.approx(py.inv_reg_inc_beta(q, a, b), abs=1e-9)


def test_std_normal_quantile_agreement():
    for q in (1e-8, 1e-4, 0.025, 0.3, 0.5, 0.7, 0.975, 0.9999):
        assert cy.std_normal_quantile(q) == \
            pytest.approx(py.std_normal_quantile(q), abs=1e-13)


def _rule(panels=1):
    nodes, raw_w = np.polynomial.legendre.leggauss(64)
    t = 0.5 * (nodes + 1.0)
    w = 0.5 * raw_w
    rq = np.array([py.inv_reg_inc_beta(float(ti), 5.5, 26.5) for ti in t])
    return rq, w


def test_diff_cdf_nodes_agreement():
    rng = np.random.default_rng(11)
    rq, w = _rule()
    for d in np.concatenate([[-0.999, 0.0, 0.999], rng.uniform(-1, 1, 20)]):
        assert cy.diff_cdf_nodes(float(d), 9.5, 20.5, rq, w) == \
            pytest.approx(py.diff_cdf_nodes(float(d), 9.5, 20.5, rq, w), abs=1e-12)


def test_diff_quantile_nodes_agreement():
    rq, w = _rule()
    for q in (0.025, 0.5, 0.975):
        # identical bisections can differ by one final bracket (1e-8 wide)
        # when the lanes' CDF values straddle q differently by an ulp
        assert cy.diff_quantile_nodes(q, 9.5, 20.5, rq, w) == \
            pytest.approx(py.diff_quantile_nodes(q, 9.5, 20.5, rq, w), abs=2e-8)


def test_pure_python_env_override():
    import subprocess
    import sys

    code = "import binomdiff; print(binomdiff.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                         text=True, env={"PATH": "", "BINOMDIFF_PURE_PYTHON": "1"})
    assert out.stdout.strip() == "python"
