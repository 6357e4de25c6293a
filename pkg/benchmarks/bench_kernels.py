"""Timing comparison of the Jacobi kernel backends.

Runs the numba-compiled sweep loop against the pure-numpy fallback over
a range of matrix sizes and prints a table of per-call times plus a
throughput figure for the contrast front end. Run as:

    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import math
import time

import numpy as np

from opcontrast import _kernels
from opcontrast.contrast import delta
from opcontrast.ensembles import wishart


def time_kernel(kernel, matrices, repeats):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for a in matrices:
            work = a.copy()
            vecs = np.eye(work.shape[0])
            fro = math.sqrt(float((work * work).sum()))
            kernel(work, vecs, 1e-12 * fro, 100)
        best = min(best, time.perf_counter() - start)
    return best / len(matrices)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--batch", type=int, default=50)
    args = parser.parse_args()

    numba_kernel = _kernels.jacobi_cycle_numba
    if numba_kernel is None:
        numba_kernel = _kernels._make_numba_kernel()
    if numba_kernel is not None:
        warm = np.eye(3)
        numba_kernel(warm.copy(), np.eye(3), 1e-12, 100)  # trigger the JIT

    rng = np.random.default_rng(0)
    print(f"{'dim':>5} {'numpy (us)':>12} {'numba (us)':>12} {'speedup':>9}")
    for dim in (4, 8, 16, 32, 64):
        matrices = []
        for _ in range(args.batch):
            g = rng.standard_normal((dim, dim))
            matrices.append(g @ g.T)
        t_numpy = time_kernel(_kernels.jacobi_cycle_numpy, matrices, args.repeats)
        if numba_kernel is None:
            print(f"{dim:>5} {t_numpy * 1e6:>12.1f} {'n/a':>12} {'n/a':>9}")
            continue
        t_numba = time_kernel(numba_kernel, matrices, args.repeats)
        print(f"{dim:>5} {t_numpy * 1e6:>12.1f} {t_numba * 1e6:>12.1f} "
              f"{t_numpy / t_numba:>8.1f}x")

    # end-to-end contrast throughput with the active backend
    ops = [wishart(rng, 8) for _ in range(200)]
    start = time.perf_counter()
    for h in ops:
        delta(h)
    elapsed = time.perf_counter() - start
    print(f"\nactive backend: {_kernels.BACKEND}")
    print(f"delta() on 8x8 operators: {len(ops) / elapsed:,.0f} calls/s")


if __name__ == "__main__":
    main()
