"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--nmax 10] [--repeat 3]

Each row counts one avoidance class for n = 1..nmax with every available
kernel and reports the best wall time and the speed-up.
"""

import argparse
import time

from ascseq.core import PatternSet
from ascseq.kernel import backends

CASES = ["", "201,210", "101,210", "100,101", "000,101", "021,102"]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    kernels = backends()
    if "cython" not in kernels:
        print("compiled kernel not built; only the Python kernel is available")
    header = f"{'patterns':<10} {'nodes':>10}" + "".join(f" {k + ' s':>10}" for k in kernels)
    print(header + ("   speed-up" if len(kernels) > 1 else ""))
    for case in CASES:
        pats = list(PatternSet.parse(case).patterns)
        times, results = {}, {}
        for name, k in kernels.items():
            times[name], results[name] = best_time(
                lambda k=k: k.count_levels(args.nmax, pats, 10**9), args.repeat)
        counts = {tuple(r[0]) for r in results.values()}
        assert len(counts) == 1, f"kernels disagree on {case!r}"
        nodes = next(iter(results.values()))[1]
        row = f"{case or '(none)':<10} {nodes:>10}" + "".join(f" {times[k]:>10.3f}" for k in kernels)
        if len(kernels) > 1:
            row += f" {times['python'] / times['cython']:>10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
