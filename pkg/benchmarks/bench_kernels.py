#!/usr/bin/env python3
"""Benchmark the compiled sweep kernel against the vectorised fallback.

Runs the exhaustive labeled-graph sweep (the hot loop of `indlab search
--exhaustive`) for a few pattern/order pairs on both backends and prints a
comparison table.  Results are asserted identical before timing is reported.
"""

import argparse
import time
from math import comb

from indlab._kernels import backends
from indlab.census import pattern_table, subset_positions
from indlab.graphs import make_cycle, make_dlg


def run_case(name, pattern, n, repeat):
    impls = backends()
    table = pattern_table(pattern)
    positions = subset_positions(n, pattern.n)
    total = 1 << comb(n, 2)
    rows = []
    reference = None
    for impl_name, fn in impls.items():
        best_time = float("inf")
        result = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            result = fn(0, total, positions, table, 10)
            best_time = min(best_time, time.perf_counter() - t0)
        if reference is None:
            reference = result
        elif result != reference:
            raise AssertionError(f"{name}: backends disagree: {result} vs {reference}")
        rows.append((impl_name, best_time, result[0]))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full", action="store_true", help="include the order-7 sweep")
    args = parser.parse_args()

    cases = [
        ("C4 over order 6", make_cycle(4), 6),
        ("DLG(1,2)_6 over order 6", make_dlg(6), 6),
    ]
    if args.full:
        cases += [
            ("C4 over order 7", make_cycle(4), 7),
            ("DLG(1,2)_6 over order 7", make_dlg(6), 7),
        ]

    print(f"{'case':<28} {'backend':<8} {'graphs':>9} {'best time':>10} {'max':>5}")
    for name, pattern, n in cases:
        total = 1 << comb(n, 2)
        rows = run_case(name, pattern, n, args.repeat)
        base = dict((impl, t) for impl, t, _ in rows).get("python")
        for impl_name, t, best in rows:
            line = f"{name:<28} {impl_name:<8} {total:>9} {t:>9.3f}s {best:>5}"
            if impl_name != "python" and base is not None and t > 0:
                line += f"  ({base / t:.1f}x vs python)"
            print(line)


if __name__ == "__main__":
    main()
