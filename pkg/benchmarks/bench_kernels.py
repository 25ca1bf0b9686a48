"""Time the compiled kernels against the pure-Python fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5] [--number 200]

Each row reports the best-of-``repeat`` time per call for both backends,
the speedup, and the largest absolute difference between their outputs.
"""

from __future__ import annotations

import argparse
import timeit

from stieltjes import _kernels_py
from stieltjes.loglog import integrand_I_pq
from stieltjes.policy import DEFAULT_POLICY
from stieltjes.quadrature import de_nodes

try:
    from stieltjes import _kernels_cy
except ImportError:
    _kernels_cy = None


def _cases():
    u, logu, w = de_nodes(DEFAULT_POLICY.quad_step, DEFAULT_POLICY.quad_halfwidth)
    f = integrand_I_pq(3, 7)
    nc, ne, n1 = f.num.arrays()
    dc, de, d1 = f.den.arrays()
    return {
        "log_power_sum": (lambda m: m.log_power_sum(0.3, 30, 2)),
        "dirichlet_deriv_sums": (lambda m: m.dirichlet_deriv_sums(0.5, 0.3, 30, 3)),
        "dirichlet_series_sums": (lambda m: m.dirichlet_series_sums(40.0, 0.7, 3, 1e-17, 10**6)[0]),
        "loglog_trapezoid": (lambda m: m.loglog_trapezoid(u, logu, w, nc, ne, n1, dc, de, d1, 2)),
    }


def _flat(x):
    return list(x) if isinstance(x, (list, tuple)) else [x]


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    args = ap.parse_args(argv)

    if _kernels_cy is None:
        print("compiled kernels not built; only the Python backend is timed")
    print(f"{'kernel':<24}{'python us':>12}{'cython us':>12}{'speedup':>10}{'max diff':>12}")
    for name, call in _cases().items():
        t_py = min(timeit.repeat(lambda: call(_kernels_py), repeat=args.repeat,
                                 number=args.number)) / args.number * 1e6
        if _kernels_cy is None:
            print(f"{name:<24}{t_py:>12.2f}{'-':>12}{'-':>10}{'-':>12}")
            continue
        t_cy = min(timeit.repeat(lambda: call(_kernels_cy), repeat=args.repeat,
                                 number=args.number)) / args.number * 1e6
        diff = max(abs(x - y) for x, y in zip(_flat(call(_kernels_py)), _flat(call(_kernels_cy))))
        print(f"{name:<24}{t_py:>12.2f}{t_cy:>12.2f}{t_py / t_cy:>10.1f}{diff:>12.2e}")


if __name__ == "__main__":
    main()
