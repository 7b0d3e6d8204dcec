"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Times each kernel on the workloads the library actually runs: eliminating
the generator matrices up to n = 64, left products for batch decomposition,
and exact matrix products for the inverse checks.
"""
import argparse
import importlib
import time

from shapecones import _purekernels
from shapecones.exactnum import to_integers
from shapecones.matrices import matrix_M, matrix_N


def _workloads(sizes):
    # rows scaled separately, as the library does before eliminating
    return [[to_integers(row)[0] for row in build(n).rows] for n in sizes for build in (matrix_M, matrix_N)]


def bench_reduce(k, mats):
    for a in mats:
        n = len(a)
        aug = [r + [int(i == j) for j in range(n)] for i, r in enumerate(a)]
        k.fraction_free_reduce(aug, n)


def bench_matvec(k, mats, reps=200):
    for a in mats:
        v = [i + 1 for i in range(len(a))]
        for _ in range(reps):
            k.int_left_matvec(v, a)


def bench_matmul(k, mats):
    for a in mats:
        k.int_matmul(a, a)


def timed(fn, *args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--max-n", type=int, default=64)
    args = p.parse_args()

    backends = {"python": _purekernels}
    try:
        backends["cython"] = importlib.import_module("shapecones._speedups")
    except ImportError:
        print("compiled extension not built; timing the pure-Python kernels only")

    mats = _workloads(range(2, args.max_n + 1, 2))
    cases = [
        ("fraction_free_reduce", bench_reduce),
        ("int_left_matvec x200", bench_matvec),
        ("int_matmul", bench_matmul),
    ]
    print(f"{'kernel':24s}" + "".join(f"{b:>12s}" for b in backends) + ("    speedup" if len(backends) > 1 else ""))
    for name, fn in cases:
        times = {b: timed(fn, k, mats, repeat=args.repeat) for b, k in backends.items()}
        line = f"{name:24s}" + "".join(f"{t:11.3f}s" for t in times.values())
        if len(times) > 1:
            line += f"    {times['python'] / times['cython']:6.2f}x"
        print(line)


if __name__ == "__main__":
    main()
