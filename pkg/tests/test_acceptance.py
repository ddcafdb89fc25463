"""Exit criteria for the package, one test per criterion.

Each test times its own body and asserts the runtime limit after the
numerical checks. The terminal summary lists every criterion as PASS/FAIL.
"""

import subprocess
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

from eulersum.coefficients import COTH, TANH, CoefficientTable, engine_weights
from eulersum.engine import ALTERNATING, AUTO, SAME_SIGN, eta_approx, tail_sum, zeta_approx, zeta_series
from eulersum.oracle import bernoulli_numbers, compute_ln2, compute_pi, pi_power, tail_bracket
from eulersum.series import COTH_TYPE, TANH_TYPE, alternating_generating, bernoulli_generating, ode_residual
from eulersum.terms import PowerTerm, head_sum

F = Fraction
GOLDEN = Path(__file__).parent / "golden"


def test_criterion_01_coefficient_exactness(criterion):
    with criterion("1 coefficient exactness") as c:
        coth = CoefficientTable(COTH).extend_to(5)
        tanh = CoefficientTable(TANH).extend_to(5)
        assert coth.values == (F(1, 6), F(1, 90), F(1, 945), F(1, 9450), F(1, 93555))
        assert [tanh[k] for k in range(1, 5)] == [F(1, 3), F(2, 15), F(17, 315), F(62, 2835)]
    assert c.seconds < 1


def test_criterion_02_generating_function_equivalence(criterion):
    with criterion("2 generating-function equivalence") as c:
        n = 20
        w = engine_weights(n // 2)
        v1 = [F(0)] * n
        v1[0], v1[1] = F(1), F(-1, 2)
        v2 = [F(0)] * n
        v2[0] = F(1, 2)
        for k in range(1, n // 2 + 1):
            if 2 * k < n:
                v1[2 * k] = -w.e(k)
            v2[2 * k - 1] = w.f(k)
        assert list(bernoulli_generating(n)) == v1
        assert list(alternating_generating(n)) == v2
    assert c.seconds < 5


def test_criterion_03_ode_residual(criterion):
    with criterion("3 ODE residual through degree 38") as c:
        for kind in (COTH_TYPE, TANH_TYPE):
            res = ode_residual(kind, 40)
            assert res.order == 39
            assert all(res[d] == 0 for d in range(39))
    assert c.seconds < 5


def test_criterion_04_ratio_identity(criterion):
    with criterion("4 ratio identity k = 1..17") as c:
        w = engine_weights(17)
        for k in range(1, 18):
            assert w.f(k) / w.e(k) == 2 ** (2 * k) - 1
    assert c.seconds < 1


def test_criterion_05_depth_and_bernoulli(criterion):
    with criterion("5 depth 34 and Bernoulli cross-check") as c:
        coth = CoefficientTable(COTH).extend_to(34)
        tanh = CoefficientTable(TANH).extend_to(35)
        assert len(coth) == 34 and coth[34] > 0
        assert len(tanh) == 35 and tanh[34] > 0
        B = bernoulli_numbers(40)
        for k in range(1, 21):
            assert coth[k] == abs(B[2 * k]) * 2 ** (2 * k - 1) / factorial(2 * k)
    assert c.seconds < 10


def test_criterion_06_zeta_reproduction(criterion):
    with criterion("6 zeta(2), zeta(3), zeta(4) at x = 10, K = 5") as c:
        pi = compute_pi(40)
        assert abs(zeta_approx(2, 10, 5) - pi.value**2 / 6) < F(1, 10**10)
        assert abs(zeta_approx(4, 10, 5) - pi.value**4 / 90) < F(1, 10**12)

        head = head_sum(PowerTerm(3), 10)
        lo, hi = tail_bracket(PowerTerm(3), 10, 10**5)
        z3 = zeta_approx(3, 10, 5)
        assert max(abs(z3 - (head + lo)), abs(z3 - (head + hi))) < F(1, 10**10)
    assert c.seconds < 5


def test_criterion_07_alternating_reproduction(criterion):
    with criterion("7 eta(1) = ln 2") as c:
        ln2 = compute_ln2(30)
        assert abs(eta_approx(1, 10, AUTO) - ln2.value) < F(1, 10**10)
    assert c.seconds < 1


def test_criterion_08_zeta_relations(criterion):
    with criterion("8 a_k pi^(2k) vs accelerated zeta(2k), k = 1..3") as c:
        for k in range(1, 4):
            a_k = CoefficientTable(COTH)[k]
            pik = pi_power(2 * k, 40)
            res = zeta_series(2 * k, 10)
            allowed = res.tail.error_estimate + a_k * pik.error_bound
            assert abs(res.total - a_k * pik.value) <= allowed
    assert c.seconds < 5


def test_criterion_09_bracketing(criterion):
    with criterion("9 tail inside naive-sum/integral bracket") as c:
        for n in (2, 3, 4):
            lo, hi = tail_bracket(PowerTerm(n), 10, 10**5)
            value = tail_sum(PowerTerm(n), 10, SAME_SIGN).value
            assert lo < value < hi
    assert c.seconds < 30


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "eulersum", *argv], capture_output=True, text=True)


def test_criterion_10_cli_golden_files(criterion):
    with criterion("10 CLI golden files and exit codes") as c:
        cases = [
            (("coeffs", "coth", "5", "--format", "csv"), "coeffs_coth_5.csv"),
            (("zeta", "2", "--digits", "12", "--format", "json"), "zeta_2_digits12.json"),
            (("verify", "--depth", "10"), "verify_depth10.txt"),
        ]
        for argv, golden in cases:
            first, second = _cli(*argv), _cli(*argv)
            assert first.returncode == 0
            assert first.stdout == (GOLDEN / golden).read_text()
            assert second.stdout == first.stdout
        assert _cli("zeta", "1").returncode == 3
