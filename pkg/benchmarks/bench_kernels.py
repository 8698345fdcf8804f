#!/usr/bin/env python3
"""Benchmark the hot kernels: pure Python vs the compiled core.

The scans below dominate audit runtime: integral parts of m-multiples
(rational and quadratic coefficients), the Weyl fractional-part search,
and closed-form section counts.  Usage:

    python benchmarks/bench_kernels.py [--repeat 5] [--m-max 20000]

Both backends produce identical outputs (asserted); only wall time
differs.  If the compiled core was not built, the script says so and
times the pure backend alone.
"""

import argparse
import time

from divpos._kernels import _pure

try:
    from divpos._kernels import _core
except ImportError:
    _core = None


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


CASES = [
    ("floor_multiples_rat(22/7, m)", lambda impl, n: impl.floor_multiples_rat(22, 7, n)),
    ("floor_multiples_quad(sqrt(2), m)", lambda impl, n: impl.floor_multiples_quad(0, 1, 2, 1, n)),
    ("floor_multiples_quad((5+3*sqrt(7))/4, m)",
     lambda impl, n: impl.floor_multiples_quad(5, 3, 7, 4, n)),
    ("weyl_search(sqrt(2), 1/10^4)", lambda impl, n: impl.weyl_search(0, 1, 2, 1, 1, 10**4, 1, n)),
    ("h0_hirzebruch sweep", lambda impl, n: [impl.h0_hirzebruch(2, a, 2 * a + 3)
                                             for a in range(n)]),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--m-max", type=int, default=20000, dest="m_max")
    args = parser.parse_args()

    print(f"m_max = {args.m_max}, best of {args.repeat} runs")
    if _core is None:
        print("compiled core not built; timing the pure backend only\n")
    header = f"{'kernel':<40} {'pure (ms)':>10}"
    if _core is not None:
        header += f" {'cython (ms)':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in CASES:
        t_pure, r_pure = best_of(lambda: fn(_pure, args.m_max), args.repeat)
        row = f"{name:<40} {1000 * t_pure:>10.2f}"
        if _core is not None:
            t_core, r_core = best_of(lambda: fn(_core, args.m_max), args.repeat)
            assert r_pure == r_core, f"backend mismatch in {name}"
            row += f" {1000 * t_core:>12.2f} {t_pure / t_core:>7.2f}x"
        print(row)


if __name__ == "__main__":
    main()
