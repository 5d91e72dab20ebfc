"""Time the compiled kernels against their pure-Python twins.

Run:  python3 benchmarks/bench_kernels.py

Workloads mirror where the kernels actually burn time: the bracket's
2^n state-loop census on growing diagrams, and canonical relabeling
hammered the way the equivalence search calls it.  Rows print as they
finish; the census workloads are capped at 14 crossings because the
pure backend's cost doubles per crossing.
"""

from __future__ import annotations

import time

from knotlab import _kernels_py
from knotlab.catalog import catalog_get
from knotlab.diagram import _solve_orientation
from knotlab.moves import random_walk

try:
    from knotlab import _kernels_c
except ImportError:
    _kernels_c = None

WIDTH = 50
HEADER = f"{'workload':<{WIDTH}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}"


def _best_of(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def _row(label: str, pure: float, compiled: float | None) -> str:
    if compiled is None:
        return f"{label:<{WIDTH}}  {pure * 1e3:>8.2f}ms  {'-':>10}  {'-':>8}"
    return (
        f"{label:<{WIDTH}}  {pure * 1e3:>8.2f}ms  {compiled * 1e3:>8.2f}ms"
        f"  {pure / compiled:>7.1f}x"
    )


def _walk(base: str, steps: int, seed: int):
    d, _ = random_walk(catalog_get(base).diagram, steps, seed=seed)
    return d


def bench_state_loop_counts() -> None:
    diagrams = [
        ("trefoil", catalog_get("trefoil").diagram, 50),
        ("hopf scramble", _walk("hopf", 5, seed=9), 10),
        ("figure-eight scramble", _walk("figure_eight", 5, seed=4), 3),
        ("solomon scramble", _walk("solomon", 6, seed=7), 3),
    ]
    for name, d, repeats in diagrams:
        quads = d.quads
        label = f"loop census, {name} ({len(quads)} crossings)"
        pure = _best_of(lambda: _kernels_py.state_loop_counts(quads), repeats)
        compiled = (
            _best_of(lambda: _kernels_c.state_loop_counts(quads), repeats)
            if _kernels_c
            else None
        )
        print(_row(label, pure, compiled), flush=True)


def bench_canonical_quads() -> None:
    diagrams = [
        (catalog_get("trefoil").diagram, 2000),
        (_walk("trefoil", 7, seed=5), 1000),
        (_walk("solomon", 6, seed=7), 500),
    ]
    for d, reps in diagrams:
        quads = list(d.quads)
        _, head, _, _ = _solve_orientation(d.quads)
        arrivals = sorted(head.values())
        label = f"canonical form, {len(quads)} crossings x{reps}"

        def run(fn, quads=quads, arrivals=arrivals, reps=reps):
            for _ in range(reps):
                fn(quads, arrivals)

        pure = _best_of(lambda: run(_kernels_py.canonical_quads), 5)
        compiled = (
            _best_of(lambda: run(_kernels_c.canonical_quads), 5)
            if _kernels_c
            else None
        )
        print(_row(label, pure, compiled), flush=True)


def main() -> None:
    if _kernels_c is None:
        print("compiled kernels not importable; timing pure Python only\n")
    print(HEADER)
    print("-" * len(HEADER))
    bench_state_loop_counts()
    bench_canonical_quads()


if __name__ == "__main__":
    main()
