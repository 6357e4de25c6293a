"""Parity between the numba kernel and the numpy fallback."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from opcontrast import _kernels


def _run(kernel, a):
    work = np.array(a, dtype=np.float64, copy=True)
    vecs = np.eye(work.shape[0])
    fro = math.sqrt(float((work * work).sum()))
    off, sweeps, converged = kernel(work, vecs, 1e-12 * fro, 100)
    return np.sort(np.diag(work)), vecs, off, sweeps, converged


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16, 32])
def test_backends_agree(n):
    rng = np.random.default_rng(n)
    g = rng.standard_normal((n, n))
    h = g @ g.T
    vals_np, _, _, _, ok_np = _run(_kernels.jacobi_cycle_numpy, h)
    assert ok_np
    if _kernels.jacobi_cycle_numba is None:
        pytest.skip("numba unavailable")
    vals_nb, _, _, _, ok_nb = _run(_kernels.jacobi_cycle_numba, h)
    assert ok_nb
    scale = max(1.0, np.abs(vals_np).max())
    assert np.abs(vals_np - vals_nb).max() <= 1e-12 * scale


def test_numpy_kernel_matches_lapack():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(1, 13))
        g = rng.standard_normal((n, n))
        h = g @ g.T
        vals, vecs, _, _, ok = _run(_kernels.jacobi_cycle_numpy, h)
        assert ok
        ref = np.linalg.eigvalsh(h)
        assert np.abs(vals - ref).max() <= 1e-10 * max(1.0, np.abs(ref).max())


def test_nonconvergence_reported_not_silent():
    rng = np.random.default_rng(3)
    g = rng.standard_normal((6, 6))
    h = g @ g.T
    work = h.copy()
    vecs = np.eye(6)
    off, sweeps, converged = _kernels.jacobi_cycle_numpy(work, vecs, 0.0, 0)
    assert not converged
    assert off > 0.0


def test_env_flag_selects_numpy_backend():
    env = dict(os.environ, OPCONTRAST_NO_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from opcontrast import _kernels; print(_kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "numpy"
