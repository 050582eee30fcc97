"""Time the pure-Python and compiled integer kernels on representative inputs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from fflv import kernels
from fflv.polytope_a import hrep_a
from fflv.polytope_c import hrep_c
from fflv.weights import WeightA, WeightC


def _paths(h):
    rows = h.path_rows()
    return [list(r.normal) for r in rows], [r.rhs for r in rows], h.dim


def workloads():
    rng = random.Random(0)
    ranked = [list(r) for r in hrep_a(WeightA([1, 1, 1, 1])).matrix()]
    square = [[rng.randint(-3, 3) for _ in range(10)] for _ in range(10)]
    la = _paths(hrep_a(WeightA([2, 2, 2])))
    lc = _paths(hrep_c(WeightC([2, 2, 2])))
    yield "rank, type A n=5 rows", lambda b: kernels.rank_int(ranked, len(ranked[0]), backend=b)
    yield "det, random 10x10", lambda b: kernels.det_int(square, backend=b)
    yield "lattice count, A (2,2,2)", lambda b: kernels.lattice_dfs(*la, 10**7, False, backend=b)
    yield "lattice count, C (2,2,2)", lambda b: kernels.lattice_dfs(*lc, 10**7, False, backend=b)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if kernels.compiled is not None else [])
    print(f"{'workload':32} " + " ".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) == 2 else ""))
    for name, fn in workloads():
        results = {b: fn(b) for b in backends}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {name}")
        times = {b: min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for b in backends}
        line = f"{name:32} " + " ".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"   {times['python'] / times['cython']:6.1f}x"
        print(line)
    if len(backends) == 1:
        print("compiled kernels not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
