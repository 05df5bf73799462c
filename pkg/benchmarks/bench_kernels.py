"""Benchmark: compiled kernel lane vs pure-Python fallback.

Times the hot kernels on representative workloads and prints one row per
kernel with both lane timings and the speedup.  Run from the repository
root:

    python3 benchmarks/bench_kernels.py
"""

import timeit

import numpy as np

from binomdiff import _kernels_py as py

try:
    from binomdiff import _kernels_cy as cy
except ImportError:
    cy = None


def _rule():
    nodes, raw_w = np.polynomial.legendre.leggauss(64)
    t = 0.5 * (nodes + 1.0)
    w = np.ascontiguousarray(0.5 * raw_w)
    rq = np.ascontiguousarray(
        [py.inv_reg_inc_beta(float(ti), 5.5, 26.5) for ti in t])
    return rq, w


def benchmarks():
    rq, w = _rule()
    xs = np.linspace(0.01, 0.99, 50)
    cases = [
        ("reg_inc_beta (50 pts)",
         lambda k: [k.reg_inc_beta(float(x), 9.5, 20.5) for x in xs], 200),
        ("inv_reg_inc_beta (tail pair)",
         lambda k: (k.inv_reg_inc_beta(0.025, 9.5, 20.5),
                    k.inv_reg_inc_beta(0.975, 9.5, 20.5)), 500),
        ("diff_cdf_nodes (256 nodes x 4)",
         lambda k: [k.diff_cdf_nodes(d, 9.5, 20.5, rq, w)
                    for d in (-0.3, 0.0, 0.15, 0.4)], 100),
        ("diff_quantile_nodes (0.025/0.975)",
         lambda k: (k.diff_quantile_nodes(0.025, 9.5, 20.5, rq, w),
                    k.diff_quantile_nodes(0.975, 9.5, 20.5, rq, w)), 20),
    ]
    return cases


def main():
    if cy is None:
        print("compiled extension not built; only timing the pure lane")
    header = f"{'kernel':38} {'python':>12} {'cython':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn, number in benchmarks():
        t_py = min(timeit.repeat(lambda: fn(py), number=number,
                                 repeat=3)) / number
        if cy is not None:
            t_cy = min(timeit.repeat(lambda: fn(cy), number=number,
                                     repeat=3)) / number
            print(f"{name:38} {t_py * 1e6:10.1f}us {t_cy * 1e6:10.1f}us "
                  f"{t_py / t_cy:8.1f}x")
        else:
            print(f"{name:38} {t_py * 1e6:10.1f}us {'-':>12} {'-':>9}")


if __name__ == "__main__":
    main()
