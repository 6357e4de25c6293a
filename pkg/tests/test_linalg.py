"""Eigensolver, norms, square roots and inverses on small matrices."""

import numpy as np
import pytest

from opcontrast.errors import NotPositiveError, SingularMatrixError
from opcontrast.linalg import (
    HermitianMatrix,
    RectMatrix,
    eig_sym,
    hermitian_norm,
    inverse,
    is_psd,
    operator_norm,
    spectral_bounds,
    sqrt_psd,
)


def test_eig_diagonal_sorted():
    vals = eig_sym(HermitianMatrix.diagonal([1, 5, 2]))
    assert np.array_equal(vals, [1, 2, 5])


def test_eig_known_2x2():
    vals = eig_sym(HermitianMatrix([[2, 1], [1, 2]]))
    assert np.abs(vals - [1, 3]).max() <= 1e-12


def test_eig_sum_matches_trace():
    rng = np.random.default_rng(0)
    g = rng.standard_normal((8, 8))
    h = HermitianMatrix(g + g.T)
    trace = float(np.trace(h.entries))
    assert abs(eig_sym(h).sum() - trace) <= 1e-10 * max(1.0, abs(trace))


def test_eig_similarity_invariance():
    rng = np.random.default_rng(1)
    for _ in range(10):
        n = int(rng.integers(2, 13))
        d = np.sort(rng.uniform(-3, 3, size=n))
        q, r = np.linalg.qr(rng.standard_normal((n, n)))
        q = q * np.sign(np.diag(r))
        h = HermitianMatrix(q @ np.diag(d) @ q.T)
        assert np.abs(eig_sym(h) - d).max() <= 1e-9


def test_eig_complex_hermitian():
    rng = np.random.default_rng(2)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        h = HermitianMatrix(g @ g.conj().T)
        vals = eig_sym(h)
        assert vals.shape == (n,)
        trace = float(np.trace(h.entries).real)
        assert abs(vals.sum() - trace) <= 1e-10 * max(1.0, abs(trace))
        assert np.abs(vals - np.linalg.eigvalsh(h.entries)).max() <= 1e-9


def test_spectral_bounds_cases():
    assert spectral_bounds(HermitianMatrix.diagonal([2, 4])) == (2, 4)
    assert spectral_bounds(HermitianMatrix.diagonal([1, 0])) == (0, 1)
    rng = np.random.default_rng(3)
    g = rng.standard_normal((6, 6))
    b = spectral_bounds(HermitianMatrix(g @ g.T))
    assert b.lo >= -1e-12 * b.hi
    assert b.lo <= b.hi


def test_operator_norm_cases():
    assert operator_norm(RectMatrix([[3, 0], [0, 4]])) == 4.0
    assert operator_norm(RectMatrix(np.zeros((3, 2)))) == 0.0
    rng = np.random.default_rng(4)
    m = RectMatrix(rng.standard_normal((5, 3)))
    gram_top = spectral_bounds(m.gram_cols()).hi
    assert abs(operator_norm(m) - np.sqrt(gram_top)) <= 1e-10
    assert abs(operator_norm(m) - operator_norm(m.transpose())) <= 1e-10


def test_hermitian_norm_matches_top_eigenvalue_magnitude():
    rng = np.random.default_rng(5)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = HermitianMatrix(g @ g.conj().T)
    assert abs(hermitian_norm(h) - eig_sym(h)[-1]) <= 1e-9 * eig_sym(h)[-1]


def test_sqrt_psd_diagonal():
    s = sqrt_psd(HermitianMatrix.diagonal([4, 9]))
    assert np.abs(s.entries - np.diag([2.0, 3.0])).max() <= 1e-12
    eye = sqrt_psd(HermitianMatrix.identity(3))
    assert np.abs(eye.entries - np.eye(3)).max() <= 1e-12


def test_sqrt_psd_reconstructs():
    rng = np.random.default_rng(6)
    for _ in range(10):
        n = int(rng.integers(1, 9))
        g = rng.standard_normal((n, n))
        h = HermitianMatrix(g @ g.T)
        s = sqrt_psd(h)
        assert is_psd(s)
        err = np.linalg.norm(s.entries @ s.entries - h.entries)
        assert err <= 1e-9 * max(1.0, np.linalg.norm(h.entries))


def test_sqrt_psd_complex_reconstructs():
    rng = np.random.default_rng(7)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = HermitianMatrix(g @ g.conj().T)
    s = sqrt_psd(h)
    err = np.linalg.norm(s.entries @ s.entries - h.entries)
    assert err <= 1e-9 * max(1.0, np.linalg.norm(h.entries))


def test_sqrt_psd_rejects_indefinite():
    with pytest.raises(NotPositiveError):
        sqrt_psd(HermitianMatrix.diagonal([1, -1]))


def test_inverse_cases():
    inv = inverse(HermitianMatrix.diagonal([2, 4]))
    assert np.abs(inv.entries - np.diag([0.5, 0.25])).max() <= 1e-12
    eye = inverse(HermitianMatrix.identity(4))
    assert np.abs(eye.entries - np.eye(4)).max() <= 1e-12
    with pytest.raises(SingularMatrixError):
        inverse(HermitianMatrix.diagonal([1, 1e-15]))


def test_inverse_identity_product():
    rng = np.random.default_rng(8)
    for _ in range(10):
        n = int(rng.integers(2, 9))
        q, r = np.linalg.qr(rng.standard_normal((n, n)))
        q = q * np.sign(np.diag(r))
        h = HermitianMatrix(q @ np.diag(rng.uniform(0.1, 5.0, size=n)) @ q.T)
        prod = h.entries @ inverse(h).entries
        assert np.abs(prod - np.eye(n)).max() <= 1e-9
        twice = inverse(inverse(h))
        assert np.abs(twice.entries - h.entries).max() <= 1e-8 * max(
            1.0, float(np.abs(h.entries).max())
        )


def test_is_psd_cases():
    assert is_psd(HermitianMatrix.diagonal([1, 0]), 1e-9)
    assert not is_psd(HermitianMatrix([[0, 1], [1, 0]]), 1e-9)
    rng = np.random.default_rng(9)
    g = rng.standard_normal((5, 5))
    assert is_psd(HermitianMatrix(g @ g.T), 1e-9)


def test_hermitian_construction_symmetrizes_small_defects():
    a = np.array([[1.0, 2.0], [2.0 + 5e-13, 3.0]])
    h = HermitianMatrix(a)
    assert np.array_equal(h.entries, h.entries.T)


def test_hermitian_construction_rejects_large_defects():
    with pytest.raises(ValueError):
        HermitianMatrix([[1.0, 2.0], [2.1, 3.0]])
    with pytest.raises(ValueError):
        HermitianMatrix([[1.0, 2.0, 3.0]])
    with pytest.raises(ValueError):
        HermitianMatrix(np.array([[np.nan]]))


def test_hermitian_entries_are_immutable():
    h = HermitianMatrix.identity(2)
    with pytest.raises(ValueError):
        h.entries[0, 0] = 5.0


def test_complex_storage_exactly_conjugate_symmetric():
    a = np.array([[2.0, 1.0 + 1.0j], [1.0 - 1.0j, 3.0]])
    h = HermitianMatrix(a)
    assert np.array_equal(h.entries, h.entries.conj().T)


def test_dimension_mismatch_on_add():
    from opcontrast.errors import DimensionMismatchError

    with pytest.raises(DimensionMismatchError):
        HermitianMatrix.identity(2) + HermitianMatrix.identity(3)


def test_rect_validation():
    with pytest.raises(ValueError):
        RectMatrix(np.zeros((0, 2)))
    with pytest.raises(ValueError):
        RectMatrix(np.array([[np.inf, 1.0]]))
