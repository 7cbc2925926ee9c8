"""Time the pure-Python and compiled kernels on the exhaustive sweeps.

    python3 benchmarks/bench_kernels.py [--n 12] [--repeat 3]
"""
from __future__ import annotations

import argparse
import timeit

from inv321 import kernels
from inv321.enumeration import gen_involutions_avoiding_321, involutions
from inv321.perm import PATTERN_321


def workloads(n: int):
    members = [p.values for p in gen_involutions_avoiding_321(n)]
    invs = [p.values for p in involutions(min(n, 10))]
    fpf = [v for v in members if all(v[i] != i + 1 for i in range(n))]
    return {
        "is_simple": lambda: [kernels.is_simple(v) for v in members],
        "contains_321": lambda: [kernels.contains_pattern(v, PATTERN_321.values) for v in invs],
        "avoids_321": lambda: [kernels.avoids_321(v) for v in invs],
        "crossing_counts": lambda: [kernels.crossing_counts(v) for v in fpf],
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    jobs = workloads(args.n)
    names = [b for b in ("python", "compiled") if b in kernels.BACKENDS]
    print(f"{'kernel':<16}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in jobs.items():
        times = []
        for b in names:
            kernels.use_backend(b)
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        row = f"{label:<16}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)
    kernels.use_backend(names[-1])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
