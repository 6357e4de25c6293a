"""Property-suite harness behind the ``verify`` CLI subcommand.

Each suite checks one family of operator inequalities over seeded random
ensembles and returns a SuiteResult; the CLI prints one line per suite.
Runs are deterministic for a given seed count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .blocks import (
    BlockOperator,
    channel_cross_term_bound,
    delta_central,
    delta_direct_sum_bound,
    delta_prime,
    delta_prime_ops,
)
from .contrast import (
    cross_term_bound,
    delta,
    delta_inverse_formula,
    delta_power2,
    delta_product,
    delta_scan,
    optimal_scale,
    weighted_subadditivity_terms,
)
from .ensembles import (
    commuting_pair,
    near_singular_psd,
    random_block_operator,
    random_channel_stack,
    random_invertible_psd,
    random_orthogonal,
    random_psd,
    random_rect,
    random_unitary_mixed_psd,
    rotated_diagonal,
    wishart,
)
from .imaging import michelson_contrast
from .linalg import HermitianMatrix, RectMatrix, spectral_bounds


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.name} ({self.checks} checks; {self.detail})"


def _fmt(v: float) -> str:
    return format(float(v), ".3g")


def suite_worked_examples() -> SuiteResult:
    """Fixed contrast values of the standard worked matrices."""
    diag = HermitianMatrix.diagonal
    cases = [
        (diag([2, 4]), 1 / 3),
        (diag([3, 9]), 1 / 2),
        (diag([1, 2]), 1 / 3),
        (diag([2, 3]), 1 / 5),
        (HermitianMatrix.identity(3), 0.0),
        (HermitianMatrix.zeros(3), 1.0),
        (diag([1, 0]), 1.0),
        (diag([0, 1, 1]), 1.0),
    ]
    for lam in (0.1, 0.5, 0.9):
        cases.append((diag([1, lam]), (1 - lam) / (1 + lam)))
    worst = 0.0
    for h, expected in cases:
        worst = max(worst, abs(delta(h).value - expected))
    # min-bound failure: two complementary projections sum to the identity
    p = diag([1, 0])
    p_perp = diag([0, 1])
    exact = (
        delta(p + p_perp).value == 0.0
        and delta(p).value == 1.0
        and delta(p_perp).value == 1.0
    )
    passed = worst <= 1e-12 and exact
    return SuiteResult(
        "worked-examples", passed, len(cases) + 1, f"max deviation {_fmt(worst)}"
    )


def suite_oracle_equivalence(samples: int, seed: int = 101) -> SuiteResult:
    """Closed form vs golden-section scan vs condition-number formula."""
    rng = np.random.default_rng(seed)
    worst_scan = worst_inv = worst_scale = 0.0
    for _ in range(samples):
        n = int(rng.integers(2, 13))
        x = wishart(rng, n) if rng.integers(2) else rotated_diagonal(
            rng, rng.uniform(0.02, 5.0, size=n)
        )
        rep = delta(x)
        scan = delta_scan(x)
        worst_scan = max(worst_scan, abs(scan.value - rep.value))
        if not rep.singular:
            worst_inv = max(worst_inv, abs(delta_inverse_formula(x) - rep.value))
            scale = optimal_scale(x)
            worst_scale = max(
                worst_scale, abs(scan.optimal_scale - scale) / scale
            )
    passed = worst_scan <= 1e-6 and worst_inv <= 1e-9 and worst_scale <= 1e-6
    return SuiteResult(
        "oracle-equivalence",
        passed,
        samples,
        f"scan {_fmt(worst_scan)}, inverse {_fmt(worst_inv)}, "
        f"scale {_fmt(worst_scale)}",
    )


def suite_weighted_subadditivity(samples: int, seed: int = 102) -> SuiteResult:
    """Norm-weighted subadditivity, plus exact equality for scaled pairs."""
    rng = np.random.default_rng(seed)
    worst_violation = -math.inf
    for _ in range(samples):
        n = int(rng.integers(2, 9))
        x = random_invertible_psd(rng, n)
        y = random_invertible_psd(rng, n)
        lhs, rhs = weighted_subadditivity_terms(x, y)
        worst_violation = max(worst_violation, lhs - rhs)
    worst_eq = 0.0
    for lam in (0.5, 2.0, 7.0):
        for _ in range(max(1, samples // 20)):
            y = random_invertible_psd(rng, int(rng.integers(2, 7)))
            lhs, rhs = weighted_subadditivity_terms(lam * y, y)
            worst_eq = max(worst_eq, abs(lhs - rhs))
    passed = worst_violation <= 1e-9 and worst_eq <= 1e-10
    return SuiteResult(
        "weighted-subadditivity",
        passed,
        samples,
        f"violation {_fmt(worst_violation)}, equality gap {_fmt(worst_eq)}",
    )


def suite_sum_contraction(samples: int, seed: int = 103) -> SuiteResult:
    """Contrast of a sum never exceeds the larger summand contrast."""
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for i in range(samples):
        n = int(rng.integers(2, 17))
        kind = i % 4
        if kind == 0:
            x, y = random_psd(rng, n), random_psd(rng, n)
        elif kind == 1:
            x, y = near_singular_psd(rng, n), random_psd(rng, n)
        elif kind == 2:
            x, y = commuting_pair(rng, n)
        else:
            x, y = wishart(rng, n), wishart(rng, n)
        bound = max(delta(x).value, delta(y).value)
        worst = max(worst, delta(x + y).value - bound)
    mixed = max(1, samples // 2)
    for _ in range(mixed):
        x = HermitianMatrix.diagonal(rng.uniform(0.0, 4.0, size=2))
        y = random_unitary_mixed_psd(rng)
        bound = max(delta(x).value, delta(y).value)
        worst = max(worst, delta(x + y).value - bound)
    passed = worst <= 1e-9
    return SuiteResult(
        "sum-contraction", passed, samples + mixed, f"worst excess {_fmt(worst)}"
    )


def suite_product_power(samples: int, seed: int = 104) -> SuiteResult:
    """Product symmetry and the square bounds."""
    rng = np.random.default_rng(seed)
    worst_sym = 0.0
    worst_prod = worst_double = worst_mono = -math.inf
    for _ in range(samples):
        n = int(rng.integers(2, 9))
        x = random_psd(rng, n)
        y = random_psd(rng, n)
        dxy = delta_product(x, y)
        dyx = delta_product(y, x)
        dx, dy = delta(x).value, delta(y).value
        dx2, dy2 = delta_power2(x), delta_power2(y)
        worst_sym = max(worst_sym, abs(dxy - dyx))
        worst_prod = max(worst_prod, dxy - max(dx2, dy2))
        worst_double = max(worst_double, dx2 - 2 * dx, dy2 - 2 * dy)
        worst_mono = max(worst_mono, dx - dx2, dy - dy2)
    passed = (
        worst_sym <= 1e-9
        and worst_prod <= 1e-9
        and worst_double <= 1e-9
        and worst_mono <= 1e-9
    )
    return SuiteResult(
        "product-power",
        passed,
        samples,
        f"symmetry {_fmt(worst_sym)}, product {_fmt(worst_prod)}, "
        f"double {_fmt(worst_double)}, monotone {_fmt(worst_mono)}",
    )


def suite_continuity(samples: int = 50, seed: int = 105) -> SuiteResult:
    """Perturbation bound and the singular-limit sequence."""
    rng = np.random.default_rng(seed)
    # truncation sequence diag(1, 1/n) climbs monotonically toward 1
    values = [delta(HermitianMatrix.diagonal([1.0, 1.0 / n])).value
              for n in range(900, 1001)]
    tail_monotone = all(b >= a for a, b in zip(values, values[1:]))
    limit_ok = values[-1] >= 0.998
    worst_ratio = 0.0
    for _ in range(samples):
        n = int(rng.integers(2, 9))
        x = random_invertible_psd(rng, n, min_eig=0.1)
        lo = spectral_bounds(x).lo
        e_raw = rng.standard_normal((n, n))
        e_sym = (e_raw + e_raw.T) / 2
        norm = float(np.abs(np.linalg.eigvalsh(e_sym)).max())
        pert = HermitianMatrix(e_sym / norm)
        eps = float(rng.uniform(0.1, 1.0)) * 1e-4 * lo
        moved = abs(delta(x + eps * pert).value - delta(x).value)
        worst_ratio = max(worst_ratio, moved / (10.0 * eps / lo))
    passed = tail_monotone and limit_ok and worst_ratio <= 1.0
    return SuiteResult(
        "continuity",
        passed,
        samples + len(values),
        f"limit {_fmt(values[-1])}, perturbation ratio {_fmt(worst_ratio)}",
    )


def suite_block_central(samples: int, seed: int = 106) -> SuiteResult:
    """Central contrast: scalar algebras, factors, direct-sum bound."""
    rng = np.random.default_rng(seed)
    worst_scalar = 0.0
    for _ in range(20):
        values = rng.uniform(0.0, 3.0, size=int(rng.integers(2, 6)))
        b = BlockOperator(tuple(HermitianMatrix.diagonal([v]) for v in values))
        worst_scalar = max(worst_scalar, delta_central(b))
    worst_factor = 0.0
    for _ in range(20):
        h = random_psd(rng, int(rng.integers(1, 6)))
        worst_factor = max(
            worst_factor, abs(delta_central(BlockOperator((h,))) - delta(h).value)
        )
    worst_bound = -math.inf
    for _ in range(samples):
        b = random_block_operator(rng, int(rng.integers(1, 5)))
        lhs, rhs = delta_direct_sum_bound(b)
        worst_bound = max(worst_bound, lhs - rhs)
    worst_indicator = 0.0
    for _ in range(10):
        k = int(rng.integers(2, 5))
        j = int(rng.integers(k))
        blocks = tuple(
            HermitianMatrix.identity(2) if i == j else HermitianMatrix.zeros(2)
            for i in range(k)
        )
        worst_indicator = max(worst_indicator, delta_central(BlockOperator(blocks)))
    passed = (
        worst_scalar <= 1e-3
        and worst_factor <= 1e-3
        and worst_bound <= 2e-3
        and worst_indicator <= 1e-3
    )
    return SuiteResult(
        "block-central",
        passed,
        samples + 50,
        f"scalar {_fmt(worst_scalar)}, factor {_fmt(worst_factor)}, "
        f"bound {_fmt(worst_bound)}, indicator {_fmt(worst_indicator)}",
    )


def suite_block_prime(samples: int, seed: int = 107) -> SuiteResult:
    """Blockwise supremum: product/power relations and sum contraction."""
    rng = np.random.default_rng(seed)
    worst_sym = 0.0
    worst_ineq = -math.inf
    for _ in range(samples):
        n_blocks = int(rng.integers(1, 4))
        b1 = random_block_operator(rng, n_blocks)
        b2 = BlockOperator(
            tuple(random_psd(rng, blk.dim) for blk in b1.blocks)
        )
        suite = delta_prime_ops(b1, b2)
        worst_sym = max(worst_sym, abs(suite.product_xy - suite.product_yx))
        worst_ineq = max(
            worst_ineq,
            suite.product_xy - max(suite.power_x, suite.power_y),
            suite.power_x - 2 * suite.base_x,
            suite.power_y - 2 * suite.base_y,
            suite.base_x - suite.power_x,
            suite.base_y - suite.power_y,
            delta_prime(b1 + b2) - max(delta_prime(b1), delta_prime(b2)),
        )
    passed = worst_sym <= 1e-9 and worst_ineq <= 1e-9
    return SuiteResult(
        "block-prime",
        passed,
        samples,
        f"symmetry {_fmt(worst_sym)}, inequalities {_fmt(worst_ineq)}",
    )


def suite_squared_singular(samples: int, seed: int = 108) -> SuiteResult:
    """Rectangular contrast: sum bound, channel stacks, orthogonal gap."""
    rng = np.random.default_rng(seed)
    worst_pair = -math.inf
    for _ in range(samples):
        n = int(rng.integers(1, 9))
        m = int(rng.integers(1, 13))
        m1 = random_rect(rng, n, m)
        m2 = random_rect(rng, n, m)
        lhs, rhs, _ = cross_term_bound(m1, m2)
        worst_pair = max(worst_pair, lhs - rhs)
    stacks = max(1, samples // 5)
    worst_stack = -math.inf
    for _ in range(stacks):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(2, 7))
        s1 = random_channel_stack(rng, 3, n, m)
        s2 = random_channel_stack(rng, 3, n, m)
        lhs, rhs = channel_cross_term_bound(s1, s2)
        worst_stack = max(worst_stack, lhs - rhs)
    # orthogonal pairs: the bound must hold; the gap is reported, not pinned
    gaps = []
    worst_orth = -math.inf
    for _ in range(max(1, samples // 10)):
        n = int(rng.integers(2, 6))
        u1 = RectMatrix(random_orthogonal(rng, n))
        u2 = RectMatrix(random_orthogonal(rng, n))
        lhs, rhs, gap = cross_term_bound(u1, u2)
        worst_orth = max(worst_orth, lhs - rhs)
        gaps.append(gap)
    worst_mich = 0.0
    for _ in range(max(100, samples // 10)):
        v = rng.uniform(0.0, 1.0, size=int(rng.integers(1, 65)))
        worst_mich = max(
            worst_mich,
            abs(michelson_contrast(v) - delta(HermitianMatrix.diagonal(v)).value),
        )
    passed = (
        worst_pair <= 1e-9
        and worst_stack <= 1e-9
        and worst_orth <= 1e-9
        and worst_mich <= 1e-12
    )
    return SuiteResult(
        "squared-singular",
        passed,
        samples + stacks,
        f"pairs {_fmt(worst_pair)}, stacks {_fmt(worst_stack)}, "
        f"orthogonal gap [{_fmt(min(gaps))}, {_fmt(max(gaps))}], "
        f"michelson {_fmt(worst_mich)}",
    )


def run_all(seeds: int = 1000) -> list[SuiteResult]:
    """Run every suite; ensemble sizes scale with ``seeds``."""
    few = max(1, seeds // 5)
    half = max(1, seeds // 2)
    return [
        suite_worked_examples(),
        suite_oracle_equivalence(few),
        suite_weighted_subadditivity(seeds),
        suite_sum_contraction(seeds),
        suite_product_power(seeds),
        suite_continuity(),
        suite_block_central(few),
        suite_block_prime(half),
        suite_squared_singular(seeds),
    ]
