"""Dense linear algebra for small Hermitian and rectangular matrices.

Everything is built around one cyclic Jacobi eigensolver (see
``_kernels``). Complex Hermitian input is handled through the real
symmetric embedding ``[[Re, -Im], [Im, Re]]`` whose spectrum is that of
the original matrix with every eigenvalue doubled; the duplicates are
dropped by taking every second sorted value.

All values are immutable; operations return fresh objects and are safe
to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import (
    DimensionMismatchError,
    NonConvergenceError,
    NotPositiveError,
    ShapeMismatchError,
    SingularMatrixError,
)

# Frobenius-relative convergence target and sweep cap of the eigensolver.
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

# Hermitian-symmetry defect tolerated (and repaired) at construction.
HERM_TOL = 1e-12

# lambda_min <= SINGULAR_TOL * lambda_max marks a positive matrix singular.
SINGULAR_TOL = 1e-12


class SpectralBounds(NamedTuple):
    """Extremes of the spectrum: ``lo = inf sigma(x)``, ``hi = sup sigma(x)``."""

    lo: float
    hi: float


def _as_square_array(entries) -> np.ndarray:
    a = np.asarray(entries)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square 2-D array, got shape {a.shape}")
    if a.shape[0] < 1:
        raise ValueError("dimension must be at least 1")
    if np.iscomplexobj(a):
        a = a.astype(np.complex128)
    else:
        a = a.astype(np.float64)
    if not np.all(np.isfinite(a)):
        raise ValueError("entries must be finite")
    return a


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Immutable dense Hermitian matrix (real symmetric or complex).

    Construction symmetrizes inputs whose conjugate-transpose defect is
    at most ``HERM_TOL`` relative to the largest entry and rejects
    anything worse, so stored entries always satisfy
    ``entries[i, j] == conj(entries[j, i])`` exactly.
    """

    entries: np.ndarray

    def __post_init__(self):
        a = _as_square_array(self.entries)
        scale = max(1.0, float(np.abs(a).max()))
        defect = float(np.abs(a - a.conj().T).max())
        if defect > HERM_TOL * scale:
            raise ValueError(
                f"matrix is not Hermitian: asymmetry {defect:.3e} exceeds "
                f"{HERM_TOL:.0e} * {scale:.3e}"
            )
        a = (a + a.conj().T) / 2
        if np.iscomplexobj(a) and not np.any(a.imag):
            a = a.real.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.entries)

    @classmethod
    def diagonal(cls, values) -> "HermitianMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    @classmethod
    def identity(cls, dim: int) -> "HermitianMatrix":
        return cls(np.eye(dim))

    @classmethod
    def zeros(cls, dim: int) -> "HermitianMatrix":
        return cls(np.zeros((dim, dim)))

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dims {self.dim} and {other.dim} differ")
        return HermitianMatrix(self.entries + other.entries)

    def __rmul__(self, scalar) -> "HermitianMatrix":
        return HermitianMatrix(float(scalar) * self.entries)

    __mul__ = __rmul__

    def __repr__(self) -> str:
        kind = "complex" if self.is_complex else "real"
        return f"HermitianMatrix(dim={self.dim}, {kind})"


@dataclass(frozen=True, eq=False)
class RectMatrix:
    """Immutable dense real rectangular matrix."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=np.float64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {a.shape}")
        if a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError("both dimensions must be at least 1")
        if not np.all(np.isfinite(a)):
            raise ValueError("entries must be finite")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n_rows(self) -> int:
        return self.entries.shape[0]

    @property
    def n_cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def transpose(self) -> "RectMatrix":
        return RectMatrix(self.entries.T)

    def __add__(self, other: "RectMatrix") -> "RectMatrix":
        if not isinstance(other, RectMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise ShapeMismatchError(f"shapes {self.shape} and {other.shape} differ")
        return RectMatrix(self.entries + other.entries)

    def __rmul__(self, scalar) -> "RectMatrix":
        return RectMatrix(float(scalar) * self.entries)

    __mul__ = __rmul__

    def gram_cols(self) -> HermitianMatrix:
        """``M^T M`` (square of column dimension)."""
        g = self.entries.T @ self.entries
        return HermitianMatrix((g + g.T) / 2)

    def gram_rows(self) -> HermitianMatrix:
        """``M M^T`` (square of row dimension)."""
        g = self.entries @ self.entries.T
        return HermitianMatrix((g + g.T) / 2)

    def __repr__(self) -> str:
        return f"RectMatrix({self.n_rows}x{self.n_cols})"


def _embed_real(a: np.ndarray) -> np.ndarray:
    """Real symmetric embedding of a complex Hermitian array."""
    return np.block([[a.real, -a.imag], [a.imag, a.real]])


def _jacobi(a_sym: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Run the Jacobi kernel on a real symmetric array.

    Returns unsorted eigenvalues (the final diagonal) and the accumulated
    rotation matrix whose columns are the matching eigenvectors.
    """
    n = a_sym.shape[0]
    work = np.array(a_sym, dtype=np.float64, order="C", copy=True)
    vecs = np.eye(n)
    fro = math.sqrt(float((work * work).sum()))
    off, sweeps, converged = _kernels.jacobi_cycle(
        work, vecs, JACOBI_TOL * fro, JACOBI_MAX_SWEEPS
    )
    if not converged:
        raise NonConvergenceError(
            f"Jacobi sweeps did not converge: off-diagonal norm {off:.3e} "
            f"above {JACOBI_TOL * fro:.3e} after {sweeps} sweeps"
        )
    return np.diag(work).copy(), vecs


def eig_sym(h: HermitianMatrix) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, ascending."""
    if h.is_complex:
        vals, _ = _jacobi(_embed_real(h.entries))
        return np.sort(vals)[0::2]
    vals, _ = _jacobi(h.entries)
    return np.sort(vals)


def _eigh(h: HermitianMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (unsorted) and eigenvectors of the real embedding."""
    a = _embed_real(h.entries) if h.is_complex else h.entries
    return _jacobi(a)


def spectral_bounds(h: HermitianMatrix) -> SpectralBounds:
    """(min eigenvalue, max eigenvalue)."""
    vals = eig_sym(h)
    return SpectralBounds(lo=float(vals[0]), hi=float(vals[-1]))


def _spectral_norm(a: np.ndarray) -> float:
    """Largest singular value of a real 2-D array via ``M^T M``."""
    g = a.T @ a
    vals, _ = _jacobi((g + g.T) / 2)
    return math.sqrt(max(float(vals.max()), 0.0))


def operator_norm(m: RectMatrix) -> float:
    """Operator (spectral) norm: sqrt of the top eigenvalue of ``M^T M``."""
    return _spectral_norm(m.entries)


def hermitian_norm(h: HermitianMatrix) -> float:
    """Operator norm of a Hermitian matrix through the rectangular route."""
    a = _embed_real(h.entries) if h.is_complex else h.entries
    return _spectral_norm(a)


def is_psd(h: HermitianMatrix, tol: float = 1e-9) -> bool:
    """True iff the minimum eigenvalue is above ``-tol * max(1, lambda_max)``."""
    lo, hi = spectral_bounds(h)
    return lo >= -tol * max(1.0, hi)


def sqrt_psd(h: HermitianMatrix) -> HermitianMatrix:
    """Positive square root of a PSD matrix (spectral construction)."""
    vals, vecs = _eigh(h)
    norm = float(np.abs(vals).max()) if vals.size else 0.0
    if float(vals.min()) < -1e-9 * norm:
        raise NotPositiveError(
            f"matrix has eigenvalue {vals.min():.3e}, below -1e-9 * {norm:.3e}"
        )
    root = vecs @ np.diag(np.sqrt(np.clip(vals, 0.0, None))) @ vecs.T
    if h.is_complex:
        n = h.dim
        re = (root[:n, :n] + root[n:, n:]) / 2
        im = (root[n:, :n] - root[:n, n:]) / 2
        out = re + 1j * im
    else:
        out = root
    return HermitianMatrix((out + out.conj().T) / 2)


def inverse(h: HermitianMatrix) -> HermitianMatrix:
    """Inverse of a well-conditioned Hermitian matrix.

    Raises SingularMatrixError when ``min |eig| <= SINGULAR_TOL * max |eig|``,
    which is the same threshold the contrast formulas use to classify an
    operator as singular.
    """
    vals = eig_sym(h)
    abs_vals = np.abs(vals)
    if float(abs_vals.min()) <= SINGULAR_TOL * float(abs_vals.max()):
        raise SingularMatrixError(
            f"eigenvalue magnitude {abs_vals.min():.3e} is within "
            f"{SINGULAR_TOL:.0e} of the largest ({abs_vals.max():.3e})"
        )
    inv = np.linalg.inv(h.entries)
    return HermitianMatrix((inv + inv.conj().T) / 2)


def is_singular_psd(bounds: SpectralBounds) -> bool:
    """Singularity classification used throughout the contrast formulas."""
    return bounds.lo <= SINGULAR_TOL * bounds.hi
