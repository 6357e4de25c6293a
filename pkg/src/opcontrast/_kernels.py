"""Cyclic Jacobi rotation kernels.

The eigensolver sweep is the hot inner loop of the whole package (every
contrast value needs a spectrum). Two interchangeable implementations are
provided: a numba-compiled scalar loop and a pure-numpy fallback using
vectorized row/column rotations. Setting the environment variable
``OPCONTRAST_NO_NUMBA=1`` (or numba being unavailable) selects the numpy
path; ``benchmarks/bench_kernels.py`` compares the two.

Both kernels share the same contract: they diagonalize a real symmetric
matrix in place, accumulate the rotations into ``v``, and return
``(off_norm, sweeps_used, converged)``. Convergence means the Frobenius
norm of the off-diagonal part fell to ``threshold`` or below; the caller
chooses ``threshold`` relative to the Frobenius norm of the input.
"""

from __future__ import annotations

import math
import os

import numpy as np

_ENV_FLAG = "OPCONTRAST_NO_NUMBA"


def _jacobi_cycle(a, v, threshold, max_sweeps):  # pragma: no cover - jitted
    n = a.shape[0]
    sweeps = 0
    while True:
        off2 = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off2 += 2.0 * a[i, j] * a[i, j]
        off = math.sqrt(off2)
        if off <= threshold:
            return off, sweeps, True
        if sweeps >= max_sweeps:
            return off, sweeps, False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                # after a few sweeps, elements too small to affect the
                # diagonal at working precision are flushed to zero
                g = 100.0 * abs(apq)
                if sweeps > 3 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = s * aip + c * aiq
                        a[q, i] = a[i, q]
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - s * viq
                    v[i, q] = s * vip + c * viq
        sweeps += 1


def jacobi_cycle_numpy(a, v, threshold, max_sweeps):
    """Pure-numpy Jacobi sweep loop (vectorized row/column rotations)."""
    n = a.shape[0]
    sweeps = 0
    while True:
        strict_upper = np.triu(a, 1)
        off = math.sqrt(2.0 * float((strict_upper * strict_upper).sum()))
        if off <= threshold:
            return off, sweeps, True
        if sweeps >= max_sweeps:
            return off, sweeps, False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                g = 100.0 * abs(apq)
                if sweeps > 3 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p] = rot_p
                a[:, q] = rot_q
                a[p, :] = rot_p
                a[q, :] = rot_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vot_p = c * v[:, p] - s * v[:, q]
                vot_q = s * v[:, p] + c * v[:, q]
                v[:, p] = vot_p
                v[:, q] = vot_q
        sweeps += 1


def _make_numba_kernel():
    try:
        from numba import njit
    except ImportError:
        return None
    return njit(cache=True)(_jacobi_cycle)


jacobi_cycle_numba = None if os.environ.get(_ENV_FLAG) else _make_numba_kernel()

if jacobi_cycle_numba is not None:
    jacobi_cycle = jacobi_cycle_numba
    BACKEND = "numba"
else:
    jacobi_cycle = jacobi_cycle_numpy
    BACKEND = "numpy"
