#!/usr/bin/env python3
"""Benchmark the scan kernels: compiled extension vs pure-Python fallback.

Usage:
    python benchmarks/bench_scans.py [--full]

The quick set keeps the pure backend under a few seconds per row; --full adds
the n=6 whole-space scans and the larger censuses (compiled only for the
14M-state rows unless you have time to spare).
"""

import argparse
import time

from seytight import scans


def run(fn, *args):
    started = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - started, result


def bench(name, workloads, include_pure_over=float("inf")):
    backends = scans.available_backends()
    print(f"\n{name}")
    print(f"{'workload':<36} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for label, fn_name, args, cost_hint in workloads:
        row = {}
        for backend_name, module in backends.items():
            if backend_name == "pure" and cost_hint > include_pure_over:
                row["pure"] = None
                continue
            elapsed, (count, matches) = run(getattr(module, fn_name), *args)
            row[backend_name] = (elapsed, count, len(matches))
        pure = row.get("pure")
        fast = row.get("compiled")
        pure_s = f"{pure[0]:>9.3f}s" if pure else "   (skip)"
        fast_s = f"{fast[0]:>9.3f}s" if fast else "   (n/a) "
        speed = f"{pure[0] / fast[0]:>8.1f}x" if pure and fast else "        -"
        print(f"{label:<36} {pure_s} {fast_s} {speed}")
        if pure and fast:
            assert pure[1] == fast[1] and pure[2] == fast[2], "backend disagreement"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="add the big n=6/n=8 rows")
    args = parser.parse_args()

    quick = [
        ("tight scan n=5 (3^10 states)", "scan_predicate", (5, scans.PRED_SEYMOUR_TIGHT), 1),
        ("counterexample scan n=5", "scan_predicate", (5, scans.PRED_COUNTEREXAMPLE), 1),
        ("sullivan scan n=5", "scan_predicate", (5, scans.PRED_SULLIVAN_TIGHT), 1),
        ("eulerian-tight scan n=5", "scan_predicate", (5, scans.PRED_EULERIAN_TIGHT), 1),
        ("degree-1 census n=6", "scan_degree_census", (6, 1), 1),
        ("degree-2 census n=7", "scan_degree_census", (7, 2), 1),
    ]
    bench("quick scans (both backends)", quick)

    if args.full:
        full = [
            ("counterexample scan n=6 (3^15)", "scan_predicate", (6, scans.PRED_COUNTEREXAMPLE), 2),
            ("tight scan n=6 (3^15)", "scan_predicate", (6, scans.PRED_SEYMOUR_TIGHT), 2),
            ("degree-1 census n=7", "scan_degree_census", (7, 1), 2),
            ("degree-2 census n=8", "scan_degree_census", (8, 2), 2),
        ]
        # the pure backend takes minutes on these; keep it honest but optional
        bench("full scans (pure included: expect minutes)", full)

    print(f"\nselected backend at import: {scans.BACKEND}")


if __name__ == "__main__":
    main()
