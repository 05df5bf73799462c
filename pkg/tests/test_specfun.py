import math

import numpy as np
import pytest

from binomdiff.specfun import (inv_reg_inc_beta, log_gamma, reg_inc_beta,
                               std_normal_quantile)

# frozen oracle values (high-precision external computation)
LN_SQRT_PI = 0.5723649429247001
BETA_9p5_20p5_MEDIAN = 0.31254447780591324
Z_0975 = 1.959963984540054


def test_log_gamma_integers():
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(2.0) == pytest.approx(0.0, abs=1e-14)
    assert log_gamma(0.5) == pytest.approx(LN_SQRT_PI, abs=1e-12)


def test_log_gamma_accuracy_small_args():
    # spot checks against Gamma recurrence: lgamma(x+1) = lgamma(x) + ln x
    for x in [0.25, 0.5, 0.75, 1.3, 2.7, 9.5, 20.5, 123.456]:
        assert log_gamma(x + 1.0) == pytest.approx(
            log_gamma(x) + math.log(x), abs=1e-12, rel=1e-13)


def test_log_gamma_domain():
    with pytest.raises(ValueError):
        log_gamma(0.0)
    with pytest.raises(ValueError):
        log_gamma(-1.5)


def test_reg_inc_beta_uniform():
    assert reg_inc_beta(0.3, 1.0, 1.0) == pytest.approx(0.3, abs=1e-12)


def test_reg_inc_beta_symmetry_point():
    assert reg_inc_beta(0.5, 3.7, 3.7) == pytest.approx(0.5, abs=1e-12)


def test_reg_inc_beta_power_law():
    # Beta(2,1) CDF is x^2
    assert reg_inc_beta(0.4, 2.0, 1.0) == pytest.approx(0.16, abs=1e-12)


def test_reg_inc_beta_boundaries_and_monotone():
    for a, b in [(0.5, 0.5), (0.5, 10.5), (3.0, 7.0), (200.0, 300.0)]:
        assert reg_inc_beta(0.0, a, b) == 0.0
        assert reg_inc_beta(1.0, a, b) == 1.0
        xs = np.linspace(0.0, 1.0, 101)
        vals = [reg_inc_beta(x, a, b) for x in xs]
        assert all(v2 >= v1 - 1e-14 for v1, v2 in zip(vals, vals[1:]))


def test_reg_inc_beta_reflection_identity():
    rng = np.random.default_rng(42)
    for _ in range(200):
        a = float(rng.uniform(0.25, 500.0))
        b = float(rng.uniform(0.25, 500.0))
        x = float(rng.uniform(0.0, 1.0))
        assert reg_inc_beta(x, a, b) + reg_inc_beta(1.0 - x, b, a) == \
            pytest.approx(1.0, abs=1e-10)


def test_reg_inc_beta_domain():
    with pytest.raises(ValueError):
        reg_inc_beta(-0.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        reg_inc_beta(1.1, 1.0, 1.0)
    with pytest.raises(ValueError):
        reg_inc_beta(0.5, 0.0, 1.0)
    with pytest.raises(ValueError):
        reg_inc_beta(0.5, 1.0, -2.0)


def test_inv_reg_inc_beta_uniform_and_power_law():
    assert inv_reg_inc_beta(0.5, 1.0, 1.0) == pytest.approx(0.5, abs=1e-10)
    # Beta(2,1) CDF x^2 inverts to sqrt(q)
    assert inv_reg_inc_beta(0.25, 2.0, 1.0) == pytest.approx(0.5, abs=1e-10)


def test_inv_reg_inc_beta_median_oracle():
    assert inv_reg_inc_beta(0.5, 9.5, 20.5) == \
        pytest.approx(BETA_9p5_20p5_MEDIAN, abs=1e-10)


def test_inv_reg_inc_beta_round_trip():
    rng = np.random.default_rng(7)
    qs = np.concatenate([[1e-6, 1.0 - 1e-6], rng.uniform(1e-6, 1 - 1e-6, 100)])
    for _ in range(30):
        a = float(rng.uniform(0.25, 500.0))
        b = float(rng.uniform(0.25, 500.0))
        for q in qs[:20]:
            x = inv_reg_inc_beta(float(q), a, b)
            assert 0.0 < x < 1.0
            assert reg_inc_beta(x, a, b) == pytest.approx(q, abs=1e-8)


def test_inv_reg_inc_beta_domain():
    for q in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(ValueError):
            inv_reg_inc_beta(q, 2.0, 3.0)


def test_std_normal_quantile_values():
    assert std_normal_quantile(0.5) == pytest.approx(0.0, abs=1e-12)
    assert std_normal_quantile(0.975) == pytest.approx(Z_0975, abs=1e-9)
    assert std_normal_quantile(0.025) == pytest.approx(-Z_0975, abs=1e-9)


def test_std_normal_quantile_antisymmetry():
    # below q ~ 1e-4 the rounding of the complement 1-q itself moves the
    # quantile by more than 1e-12, so the identity is only testable here
    for q in [1e-4, 0.01, 0.1, 0.3, 0.49, 0.5]:
        assert std_normal_quantile(q) == \
            pytest.approx(-std_normal_quantile(1.0 - q), abs=1e-12)


def test_std_normal_quantile_deep_tail_accuracy():
    # Phi(z(q)) = q to ~1e-9 even at q = 1e-8 (one-sided check via erfc)
    z = std_normal_quantile(1e-8)
    assert 0.5 * math.erfc(-z / math.sqrt(2.0)) == pytest.approx(1e-8, rel=1e-6)


def test_std_normal_quantile_domain():
    for q in (0.0, 1.0, -1.0, 2.0):
        with pytest.raises(ValueError):
            std_normal_quantile(q)
