#!/usr/bin/env python3
"""Compare the compiled and pure-Python enumeration kernels.

Runs the same closure-system DFS through both backends and reports wall
times plus the speedup.  The default workloads finish in a few seconds;
``--full`` adds a 16-element saturated enumeration whose pure run takes
around half a minute.
"""

from __future__ import annotations

import argparse
import sys
import time

from latfac import available_backends, make_standard
from latfac.relations import pair_space

WORKLOADS = [
    ("chain(6) transfer", ("chain", (6,)), False),
    ("grid(2,1) transfer", ("grid", (2, 1)), False),
    ("boolean(3) transfer", ("boolean", (3,)), False),
    ("grid(2,2) transfer", ("grid", (2, 2)), False),
    ("grid(2,2) saturated", ("grid", (2, 2)), True),
    ("grid(2,3) saturated", ("grid", (2, 3)), True),
]

FULL_WORKLOADS = [
    ("grid(3,3) saturated", ("grid", (3, 3)), True),
]


def run_workload(lattice, saturated: bool, backend: str) -> tuple[int, float]:
    kernel = pair_space(lattice).kernel(backend)
    start = time.perf_counter()
    out = kernel.enumerate_closed(saturated, 10**7)
    return len(out), time.perf_counter() - start


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the slowest workload")
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args(argv)

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend unavailable; only timing the pure backend")

    workloads = WORKLOADS + (FULL_WORKLOADS if args.full else [])
    header = f"{'workload':<24}{'systems':>9}" + "".join(
        f"{b:>12}" for b in backends
    )
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, (kind, params), saturated in workloads:
        lattice = make_standard(kind, *params)
        times: dict[str, float] = {}
        count = 0
        for backend in backends:
            best = float("inf")
            repeats = args.repeat if backend == "compiled" else 1
            for _ in range(repeats):
                count, elapsed = run_workload(lattice, saturated, backend)
                best = min(best, elapsed)
            times[backend] = best
        row = f"{label:<24}{count:>9}" + "".join(
            f"{times[b]:>11.3f}s" for b in backends
        )
        if len(backends) > 1:
            row += f"{times['pure'] / max(times['compiled'], 1e-9):>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
