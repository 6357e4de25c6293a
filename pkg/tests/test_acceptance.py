"""Acceptance suite: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with ``pytest -s`` or ``-v`` to
see them inline). The heavier criteria reuse the verification suites in
``opcontrast.verify``, which pin exactly these tolerances.
"""

import json

import numpy as np
import pytest

from opcontrast import verify
from opcontrast.cli import main
from opcontrast.contrast import delta, delta2
from opcontrast.linalg import HermitianMatrix, RectMatrix

diag = HermitianMatrix.diagonal


def _report(criterion: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'} {criterion}: {detail}")
    assert ok, f"{criterion}: {detail}"


def test_criterion_1_worked_value_regressions():
    cases = [
        (diag([2, 4]), 1 / 3),
        (diag([3, 9]), 1 / 2),
        (diag([1, 2]), 1 / 3),
        (diag([2, 3]), 1 / 5),
        (HermitianMatrix.identity(2), 0.0),
        (HermitianMatrix.identity(5), 0.0),
        (HermitianMatrix.zeros(3), 1.0),
        (diag([1, 0]), 1.0),
        (diag([1, 1, 0]), 1.0),
    ]
    for lam in (0.1, 0.5, 0.9):
        cases.append((diag([1, lam]), (1 - lam) / (1 + lam)))
    worst = max(abs(delta(h).value - expected) for h, expected in cases)
    _report(
        "criterion 1 (worked values, tol 1e-12)",
        worst <= 1e-12,
        f"{len(cases)} values, max deviation {worst:.3e}",
    )


def test_criterion_2_oracle_equivalence():
    result = verify.suite_oracle_equivalence(200)
    _report("criterion 2 (oracle equivalence, 200 samples)", result.passed,
            result.detail)


def test_criterion_3_weighted_subadditivity():
    result = verify.suite_weighted_subadditivity(1000)
    _report("criterion 3 (weighted subadditivity, 1000 pairs)", result.passed,
            result.detail)


def test_criterion_4_sum_contraction():
    result = verify.suite_sum_contraction(1000)
    _report("criterion 4 (sum contraction, 1000 pairs + 500 mixed 2x2)",
            result.passed, result.detail)


def test_criterion_5_product_power():
    result = verify.suite_product_power(1000)
    _report("criterion 5 (product and power bounds, 1000 pairs)",
            result.passed, result.detail)


def test_criterion_6_continuity_and_singular_limit():
    limit_value = delta(diag([1.0, 1.0 / 1000.0])).value
    result = verify.suite_continuity()
    ok = result.passed and limit_value >= 0.998
    _report("criterion 6 (continuity and singular limit)", ok,
            f"{result.detail}; delta at n=1000 is {limit_value:.6f}")


def test_criterion_7_block_measures():
    central = verify.suite_block_central(200)
    prime = verify.suite_block_prime(500)
    ok = central.passed and prime.passed
    _report("criterion 7 (central and blockwise measures)", ok,
            f"{central.detail}; {prime.detail}")


def test_criterion_8_squared_singular_values():
    fixed_ok = (
        abs(delta2(RectMatrix([[1, 0], [0, 2]])) - 3 / 5) <= 1e-12
        and abs(delta2(RectMatrix([[1, 0, 0], [0, 2, 0]])) - 3 / 5) <= 1e-12
        and delta2(RectMatrix([[0, 0], [0, 1]])) == 1.0
    )
    result = verify.suite_squared_singular(1000)
    ok = fixed_ok and result.passed
    _report("criterion 8 (squared singular values, 1000 pairs)", ok,
            f"fixed values ok={fixed_ok}; {result.detail}")


def test_criterion_9_counterexample_regressions():
    increasing = (
        delta(diag([2, 4])).value == pytest.approx(1 / 3, abs=0)
        and delta(diag([3, 9])).value == 0.5
        and delta(diag([2, 4])).value <= delta(diag([3, 9])).value
    )
    decreasing = (
        delta(diag([1, 2])).value == pytest.approx(1 / 3, abs=0)
        and delta(diag([2, 3])).value == pytest.approx(1 / 5, abs=0)
        and delta(diag([1, 2])).value >= delta(diag([2, 3])).value
    )
    p, p_perp = diag([1, 0]), diag([0, 1])
    min_bound_fails = (
        delta(p).value == 1.0
        and delta(p_perp).value == 1.0
        and delta(p + p_perp).value == 0.0
    )
    ok = increasing and decreasing and min_bound_fails
    _report("criterion 9 (counterexample regressions, exact)", ok,
            f"monotone-up {increasing}, monotone-down {decreasing}, "
            f"min-bound-failure {min_bound_fails}")


def test_criterion_10_cli_end_to_end(tmp_path, capsys):
    matrix = tmp_path / "m.txt"
    matrix.write_text("2 2\n2 0\n0 4\n")
    blockfile = tmp_path / "b.txt"
    blockfile.write_text("2 2\n2 0\n0 4\n---\n2 2\n3 0\n0 9\n")
    rect = tmp_path / "r.txt"
    rect.write_text("2 3\n1 0 0\n0 2 0\n")
    pgm = tmp_path / "c.pgm"
    pgm.write_bytes(b"P2\n2 2\n255\n128 128 128 128\n")

    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    checks = []

    code, out, _ = run("delta", str(matrix))
    checks.append(("delta output", code == 0
                   and out.startswith("delta = 0.333333333\n")
                   and "optimal_scale = 3\n" in out))
    _, out2, _ = run("delta", str(matrix))
    checks.append(("delta deterministic", out == out2))

    code, out, _ = run("blocks", str(blockfile))
    checks.append(("blocks output", code == 0 and "delta_prime = 0.5" in out))

    code, out, _ = run("delta2", str(rect))
    checks.append(("delta2 output", code == 0 and "delta2 = 0.6" in out))

    code, out, _ = run("image", str(pgm), "--mode", "michelson")
    checks.append(("image output", code == 0 and "michelson_overall = 0" in out))

    code, out, _ = run("cone", str(matrix), "--c", "0.5")
    checks.append(("cone output", code == 0 and "member = true" in out))

    code, out, _ = run("delta", str(matrix), "--json")
    parsed = json.loads(out)
    checks.append(("json report", code == 0
                   and parsed["metrics"][0]["value"] == 1 / 3))

    code, out, _ = run("verify", "--seeds", "1000")
    checks.append(("verify exit 0", code == 0
                   and all(ln.startswith("PASS") for ln in out.splitlines())))

    bad_matrix = tmp_path / "bad.txt"
    bad_matrix.write_text("2 2\n1 2\n")
    code, _, err = run("delta", str(bad_matrix))
    checks.append(("malformed matrix exits 2", code == 2 and "error:" in err))

    bad_pnm = tmp_path / "bad.pgm"
    bad_pnm.write_bytes(b"P5\n4 4\n255\nxx")
    code, _, err = run("image", str(bad_pnm))
    checks.append(("malformed pnm exits 2 with offset",
                   code == 2 and "byte offset" in err))

    failed = [name for name, ok in checks if not ok]
    _report("criterion 10 (CLI end-to-end)", not failed,
            f"{len(checks)} checks" + (f"; failed: {failed}" if failed else ""))
