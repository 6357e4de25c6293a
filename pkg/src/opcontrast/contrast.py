"""Contrast functionals of a single positive operator.

The central quantity is the generalized Michelson contrast of a PSD
matrix: the infimum over positive scalings A of ``||1 - x/A||``. For a
positive matrix it collapses to the spectral ratio
``(hi - lo) / (hi + lo)`` of the extreme eigenvalues, which is what
``delta`` computes. ``delta_scan`` minimizes the defining objective
numerically (golden-section over 1/A) and serves as the independent
oracle; ``delta_inverse_formula`` reaches the same number through
``(k - 1) / (k + 1)`` with ``k = ||x|| * ||x^-1||``.

Conventions: the zero matrix has contrast 1, and any matrix with a
non-positive eigenvalue evaluated through the clamped spectral formula
(``delta_clamped``) also gets 1. Contrast of a product ``xy`` of
positives is realized on the spectrum of ``x^(1/2) y x^(1/2)``, which
agrees with ``sigma(xy)`` away from zero and avoids any non-Hermitian
eigenproblem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    DimensionMismatchError,
    NonConvergenceError,
    NotPositiveError,
    ShapeMismatchError,
    SingularMatrixError,
    ZeroOperatorError,
)
from .linalg import (
    HermitianMatrix,
    RectMatrix,
    SpectralBounds,
    hermitian_norm,
    inverse,
    is_singular_psd,
    spectral_bounds,
    sqrt_psd,
)

PSD_TOL = 1e-9


class ReportPath(Enum):
    SPECTRAL = "spectral"
    INVERSE_FORMULA = "inverse-formula"
    SCAN = "scan"


@dataclass(frozen=True)
class ContrastReport:
    """Contrast value plus the diagnostics that produced it."""

    value: float
    path: ReportPath
    bounds: SpectralBounds
    optimal_scale: Optional[float]
    singular: bool

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"contrast value {self.value} outside [0, 1]")
        if self.path is ReportPath.INVERSE_FORMULA and self.singular:
            raise ValueError("inverse-formula path cannot report a singular operand")


@dataclass(frozen=True)
class ScanConfig:
    """Controls for the golden-section oracle."""

    bracket_expand: float = 10.0
    golden_tol: float = 1e-10
    max_iters: int = 200

    def __post_init__(self):
        if self.golden_tol <= 0.0:
            raise ValueError("golden_tol must be positive")
        if self.bracket_expand <= 1.0:
            raise ValueError("bracket_expand must exceed 1")


def _psd_bounds(x: HermitianMatrix) -> SpectralBounds:
    b = spectral_bounds(x)
    if b.lo < -PSD_TOL * max(1.0, b.hi):
        raise NotPositiveError(
            f"minimum eigenvalue {b.lo:.3e} is below the PSD tolerance "
            f"for maximum {b.hi:.3e}"
        )
    return b


def _value_from_bounds(lo: float, hi: float) -> float:
    if hi <= 0.0:
        return 1.0
    lo = max(lo, 0.0)
    return (hi - lo) / (hi + lo)


def delta(x: HermitianMatrix) -> ContrastReport:
    """Contrast of a PSD matrix via the spectral ratio.

    Negative eigenvalues within the PSD tolerance are clamped to zero;
    anything below raises NotPositiveError. The zero matrix reports 1.
    """
    b = _psd_bounds(x)
    value = _value_from_bounds(b.lo, b.hi)
    scale = (max(b.lo, 0.0) + b.hi) / 2 if b.hi > 0.0 else None
    return ContrastReport(
        value=value,
        path=ReportPath.SPECTRAL,
        bounds=b,
        optimal_scale=scale,
        singular=is_singular_psd(b),
    )


def delta_clamped(h: HermitianMatrix) -> float:
    """Clamped spectral contrast of an arbitrary Hermitian matrix.

    Any matrix with a non-positive eigenvalue (including the zero matrix)
    gets contrast 1; positive definite input matches ``delta``.
    """
    b = spectral_bounds(h)
    return _value_from_bounds(b.lo, b.hi)


def delta_inverse_formula(x: HermitianMatrix) -> float:
    """Contrast through the condition number: ``(k - 1) / (k + 1)``.

    ``k`` is the product of the operator norms of ``x`` and its inverse,
    each computed through the rectangular-norm route rather than from
    the spectral bounds directly. Raises SingularMatrixError when the
    inverse is unavailable; ``delta`` handles that case (value 1).
    """
    b = _psd_bounds(x)
    if is_singular_psd(b):
        raise SingularMatrixError("contrast of a singular operator is 1; use delta")
    kappa = hermitian_norm(x) * hermitian_norm(inverse(x))
    return (kappa - 1.0) / (kappa + 1.0)


def _scan_objective(lam: float, lo: float, hi: float) -> float:
    return max(abs(1.0 - lo * lam), abs(1.0 - hi * lam))


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def delta_scan(x: HermitianMatrix, cfg: ScanConfig = ScanConfig()) -> ContrastReport:
    """Minimize the defining objective ``||1 - x/A||`` numerically.

    The objective, written in ``lam = 1/A``, is
    ``max(|1 - lo*lam|, |1 - hi*lam|)``: piecewise linear and unimodal,
    so a golden-section search over
    ``(0, bracket_expand * 2/(lo + hi))`` is exact up to tolerance.
    """
    b = _psd_bounds(x)
    lo, hi = max(b.lo, 0.0), b.hi
    if hi <= 0.0:
        return ContrastReport(
            value=1.0,
            path=ReportPath.SCAN,
            bounds=b,
            optimal_scale=None,
            singular=True,
        )
    upper = cfg.bracket_expand * 2.0 / (lo + hi)
    a_lam, b_lam = 0.0, upper
    c_lam = b_lam - _INV_PHI * (b_lam - a_lam)
    d_lam = a_lam + _INV_PHI * (b_lam - a_lam)
    f_c = _scan_objective(c_lam, lo, hi)
    f_d = _scan_objective(d_lam, lo, hi)
    iters = 0
    while (b_lam - a_lam) > cfg.golden_tol * upper:
        if iters >= cfg.max_iters:
            raise NonConvergenceError(
                f"golden-section stalled after {iters} iterations "
                f"(bracket width {b_lam - a_lam:.3e})"
            )
        if f_c < f_d:
            b_lam, d_lam, f_d = d_lam, c_lam, f_c
            c_lam = b_lam - _INV_PHI * (b_lam - a_lam)
            f_c = _scan_objective(c_lam, lo, hi)
        else:
            a_lam, c_lam, f_c = c_lam, d_lam, f_d
            d_lam = a_lam + _INV_PHI * (b_lam - a_lam)
            f_d = _scan_objective(d_lam, lo, hi)
        iters += 1
    lam_best = (a_lam + b_lam) / 2.0
    return ContrastReport(
        value=min(_scan_objective(lam_best, lo, hi), 1.0),
        path=ReportPath.SCAN,
        bounds=b,
        optimal_scale=1.0 / lam_best,
        singular=is_singular_psd(b),
    )


def optimal_scale(x: HermitianMatrix) -> float:
    """The scaling A minimizing ``||1 - x/A||``: the spectral midpoint."""
    b = _psd_bounds(x)
    if b.hi <= 0.0:
        raise ZeroOperatorError("the zero operator has no optimal scaling")
    return (max(b.lo, 0.0) + b.hi) / 2.0


def delta_product(x: HermitianMatrix, y: HermitianMatrix) -> float:
    """Contrast of the product ``xy`` of two PSD matrices.

    Realized on the spectrum of ``x^(1/2) y x^(1/2)``. A singular factor
    forces the value 1.
    """
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dims {x.dim} and {y.dim} differ")
    bx = _psd_bounds(x)
    by = _psd_bounds(y)
    if is_singular_psd(bx) or is_singular_psd(by):
        return 1.0
    root = sqrt_psd(x)
    product = root.entries @ y.entries @ root.entries
    sym = HermitianMatrix((product + product.conj().T) / 2)
    return _value_from_bounds(*spectral_bounds(sym))


def delta_power2(x: HermitianMatrix) -> float:
    """Contrast of ``x^2``: equals ``(hi^2 - lo^2) / (hi^2 + lo^2)``."""
    _psd_bounds(x)
    square = HermitianMatrix(x.entries @ x.entries)
    b = spectral_bounds(square)
    return _value_from_bounds(b.lo, b.hi)


def cone_member(x: HermitianMatrix, c: float, slack: float = 1e-9) -> bool:
    """Membership of ``x`` in the cone of operators with contrast <= c."""
    if not 0.0 <= c <= 1.0:
        raise ValueError(f"cone level {c} outside [0, 1]")
    return delta(x).value <= c + slack


def weighted_subadditivity_terms(
    x: HermitianMatrix, y: HermitianMatrix
) -> tuple[float, float]:
    """Both sides of the norm-weighted subadditivity inequality.

    lhs is ``(hi + lo)(x + y) * delta(x + y)``; rhs is the matching sum
    over the summands. For invertible PSD operators ``hi + lo`` equals
    ``||.|| + 1/||.^-1||``. Callers assert ``lhs <= rhs``; equality holds
    for proportional pairs.
    """
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dims {x.dim} and {y.dim} differ")
    terms = []
    for name, h in (("x", x), ("y", y), ("x+y", x + y)):
        b = _psd_bounds(h)
        if is_singular_psd(b):
            raise SingularMatrixError(f"operand {name} is singular")
        terms.append((b.lo + b.hi) * _value_from_bounds(b.lo, b.hi))
    return terms[2], terms[0] + terms[1]


def delta2(m: RectMatrix) -> float:
    """Contrast of the squared singular values of a rectangular matrix.

    Minimum of the contrasts of the two Gram matrices, realized by
    evaluating the smaller one (the larger side is rank-deficient for
    strictly rectangular input and would contribute 1).
    """
    gram = m.gram_cols() if m.n_cols <= m.n_rows else m.gram_rows()
    return delta_clamped(gram)


def cross_term_bound(
    m1: RectMatrix, m2: RectMatrix
) -> tuple[float, float, float]:
    """Both sides of the squared-singular-value sum bound.

    Returns ``(lhs, rhs, gap)`` with ``lhs = delta2(m1 + m2)`` and
    ``rhs = max(delta2(m1), delta2(m2), min over both cross terms)``.
    Cross terms are Hermitian but possibly indefinite, so they are
    evaluated through the clamped spectral formula.
    """
    if m1.shape != m2.shape:
        raise ShapeMismatchError(f"shapes {m1.shape} and {m2.shape} differ")
    lhs = delta2(m1 + m2)
    a1, a2 = m1.entries, m2.entries
    cross_cols = a2.T @ a1 + a1.T @ a2
    cross_rows = a2 @ a1.T + a1 @ a2.T
    cross = min(
        delta_clamped(HermitianMatrix((cross_cols + cross_cols.T) / 2)),
        delta_clamped(HermitianMatrix((cross_rows + cross_rows.T) / 2)),
    )
    rhs = max(delta2(m1), delta2(m2), cross)
    return lhs, rhs, rhs - lhs
