"""Random matrix ensembles for property verification.

Everything takes an explicit numpy Generator so runs are reproducible;
the verification harness and the test suite both build their operands
here.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .blocks import BlockOperator, ChannelStack
from .linalg import HermitianMatrix, RectMatrix


def random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix (QR with sign correction)."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def wishart(rng: np.random.Generator, n: int) -> HermitianMatrix:
    """Gram matrix of a square Gaussian factor; PSD and a.s. invertible."""
    g = rng.standard_normal((n, n))
    return HermitianMatrix(g @ g.T)


def rotated_diagonal(rng: np.random.Generator, eigs) -> HermitianMatrix:
    """PSD matrix with prescribed spectrum under a random rotation."""
    eigs = np.asarray(eigs, dtype=np.float64)
    q = random_orthogonal(rng, eigs.size)
    a = q @ np.diag(eigs) @ q.T
    return HermitianMatrix((a + a.T) / 2)


def random_psd(rng: np.random.Generator, n: int) -> HermitianMatrix:
    """Random PSD matrix drawn from either standard ensemble."""
    if rng.integers(2):
        return wishart(rng, n)
    return rotated_diagonal(rng, rng.uniform(0.05, 4.0, size=n))


def random_invertible_psd(
    rng: np.random.Generator, n: int, min_eig: float = 0.05
) -> HermitianMatrix:
    return rotated_diagonal(rng, rng.uniform(min_eig, 4.0, size=n))


def near_singular_psd(rng: np.random.Generator, n: int) -> HermitianMatrix:
    eigs = rng.uniform(0.5, 4.0, size=n)
    eigs[0] = rng.uniform(1e-9, 1e-7)
    return rotated_diagonal(rng, eigs)


def exactly_singular_psd(rng: np.random.Generator, n: int) -> HermitianMatrix:
    """PSD with an exact zero eigenvalue up to rotation roundoff."""
    eigs = rng.uniform(0.5, 4.0, size=n)
    eigs[0] = 0.0
    return rotated_diagonal(rng, eigs)


def commuting_pair(
    rng: np.random.Generator, n: int
) -> tuple[HermitianMatrix, HermitianMatrix]:
    """Two PSD matrices sharing an eigenbasis."""
    q = random_orthogonal(rng, n)
    out = []
    for _ in range(2):
        d = np.diag(rng.uniform(0.05, 4.0, size=n))
        a = q @ d @ q.T
        out.append(HermitianMatrix((a + a.T) / 2))
    return out[0], out[1]


def make_unitary_mixed_psd(
    alpha: float, beta: float, lam: float, phase: float = 0.0
) -> HermitianMatrix:
    """2x2 PSD with spectrum {alpha, beta} mixed by a rank-1 projection.

    Entries are ``beta + (alpha - beta) * [[lam, d*s], [conj(d)*s, 1 - lam]]``
    with ``s = sqrt(lam * (1 - lam))`` and ``d`` a unit complex number, so
    the off-diagonal block is a unitary mixing of the two eigenvalues.
    """
    if alpha < 0.0 or beta < 0.0:
        raise ValueError("eigenvalues must be nonnegative")
    if not 0.0 <= lam <= 1.0:
        raise ValueError("mixing weight must lie in [0, 1]")
    d = cmath.exp(1j * phase)
    s = math.sqrt(lam * (1.0 - lam))
    top = beta + (alpha - beta) * lam
    bot = alpha + (beta - alpha) * lam
    off = (alpha - beta) * d * s
    if phase == 0.0:
        m = np.array([[top, off.real], [off.real, bot]])
    else:
        m = np.array([[top, off], [off.conjugate(), bot]])
    return HermitianMatrix(m)


def random_unitary_mixed_psd(rng: np.random.Generator) -> HermitianMatrix:
    return make_unitary_mixed_psd(
        alpha=float(rng.uniform(0.0, 4.0)),
        beta=float(rng.uniform(0.0, 4.0)),
        lam=float(rng.uniform(0.0, 1.0)),
        phase=float(rng.uniform(0.0, 2.0 * math.pi)),
    )


def random_rect(rng: np.random.Generator, n: int, m: int) -> RectMatrix:
    return RectMatrix(rng.standard_normal((n, m)))


def random_block_operator(
    rng: np.random.Generator,
    n_blocks: int,
    max_dim: int = 4,
    invertible: bool = False,
) -> BlockOperator:
    blocks = []
    for _ in range(n_blocks):
        dim = int(rng.integers(1, max_dim + 1))
        if invertible:
            blocks.append(random_invertible_psd(rng, dim))
        else:
            blocks.append(random_psd(rng, dim))
    return BlockOperator(tuple(blocks))


def random_channel_stack(
    rng: np.random.Generator, channels: int, n: int, m: int
) -> ChannelStack:
    return ChannelStack(
        tuple(random_rect(rng, n, m) for _ in range(channels))
    )
