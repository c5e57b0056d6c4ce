"""Compare the compiled kernels with the pure-Python fallback.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import sys
import time

from mixedstirling import _pure
from mixedstirling.oracle import _args
from mixedstirling.problem import BallSpec, CellSpec, PartitionProblem

try:
    from mixedstirling import _kernels
except ImportError:
    _kernels = None

ORACLE_CASES = [
    ("7 distinct balls, 6 labeled cells", PartitionProblem(BallSpec.distinct(7), CellSpec.labeled(6))),
    ("7 distinct balls, cells (3,2,1), prefix 3", PartitionProblem(BallSpec.distinct(7), CellSpec((3, 2, 1)), True, 3)),
    ("balls (2,2,2,2), cells (2,2,2), empties", PartitionProblem(BallSpec((2, 2, 2, 2)), CellSpec((2, 2, 2)), True)),
    ("balls (3,2,2,1,1), cells (2,1,1,1)", PartitionProblem(BallSpec((3, 2, 2, 1, 1)), CellSpec((2, 1, 1, 1)))),
]

SEMIPRIMES = [
    4294967279 * 4294967291,
    1000000007 * 998244353,
    (2**31 - 1) * 2147483629,
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def split(mod, n):
    c = 1
    while True:
        d = mod.pollard_brent(n, c, 2)
        if 1 < d < n:
            return d
        c += 1


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not available; nothing to compare")
        return 1
    print(f"{'case':48s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for label, problem in ORACLE_CASES:
        args = _args(problem)
        tp, vp = best_of(lambda: _pure.count_configurations(*args), opts.repeat)
        tc, vc = best_of(lambda: _kernels.count_configurations(*args), opts.repeat)
        assert vp == vc, (label, vp, vc)
        print(f"{'oracle: ' + label:48s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")
    for n in SEMIPRIMES:
        tp, dp = best_of(lambda: split(_pure, n), opts.repeat)
        tc, dc = best_of(lambda: split(_kernels, n), opts.repeat)
        assert n % dp == 0 and n % dc == 0
        print(f"{'rho: ' + str(n):48s} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
