"""Cross-check battery run by ``eulersum verify``.

Each check compares two independent routes to the same quantity and
returns ``(passed, detail)``. ``run_checks`` runs all of them; reporting
and exit status are left to the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import coefficients as coeffs
from . import engine, oracle, series

KNOWN_COTH = [Fraction(1, 6), Fraction(1, 90), Fraction(1, 945), Fraction(1, 9450), Fraction(1, 93555)]
KNOWN_TANH = [Fraction(1), Fraction(1, 3), Fraction(2, 15), Fraction(17, 315), Fraction(62, 2835)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def _first_mismatch(a, b):
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return None


def check_known_values(depth: int):
    n1 = min(depth, len(KNOWN_COTH))
    n2 = min(depth + 1, len(KNOWN_TANH))
    a = coeffs.coth_coefficients(n1).values
    c = coeffs.tanh_coefficients(n2).values
    ok = list(a) == KNOWN_COTH[:n1] and list(c) == KNOWN_TANH[:n2]
    return ok, f"a_1..a_{n1} = {', '.join(map(str, a))}; c_1..c_{n2 - 1} = {', '.join(map(str, c[1:]))}"


def check_same_sign_generating(depth: int):
    # z/(e^z - 1) = 1 - z/2 - sum_k e_k z^(2k)
    order = 2 * depth + 1
    ps = series.bernoulli_generating(order)
    w = coeffs.engine_weights(depth)
    expected = [Fraction(0)] * order
    expected[0], expected[1] = Fraction(1), Fraction(-1, 2)
    for k in range(1, depth + 1):
        expected[2 * k] = -w.e(k)
    bad = _first_mismatch(ps.coefficients, expected)
    if bad is not None:
        return False, f"z/(e^z-1) differs from the recurrence at z^{bad}"
    shifted = series.PowerSeries((series.ps_exp_z(order + 1) - 1).coefficients[1:])
    if ps * shifted != series.PowerSeries.constant(1, order):
        return False, "V (e^z-1)/z != 1"
    return True, f"z/(e^z-1) matches recurrence through z^{order - 1}"


def check_alternating_generating(depth: int):
    # 1/(1 + e^z) = 1/2 + sum_k f_k z^(2k-1)
    order = 2 * depth + 1
    ps = series.alternating_generating(order)
    w = coeffs.engine_weights(depth)
    expected = [Fraction(0)] * order
    expected[0] = Fraction(1, 2)
    for k in range(1, depth + 1):
        expected[2 * k - 1] = w.f(k)
    bad = _first_mismatch(ps.coefficients, expected)
    if bad is not None:
        return False, f"1/(1+e^z) differs from the recurrence at z^{bad}"
    if ps * (series.ps_exp_z(order) + 1) != series.PowerSeries.constant(1, order):
        return False, "V (1+e^z) != 1"
    return True, f"1/(1+e^z) matches recurrence through z^{order - 1}"


def check_ratio_series(depth: int):
    order = 2 * depth + 2
    coth = series.ps_ratio_even_odd(order, series.COTH_TYPE)
    tanh = series.ps_ratio_even_odd(order, series.TANH_TYPE)
    a = coeffs.coth_coefficients(depth)
    c = coeffs.tanh_coefficients(depth + 1)
    for k in range(1, depth + 1):
        if (-1) ** (k + 1) * coth[2 * k] / 2 != a[k]:
            return False, f"t*coth(t) coefficient of t^{2 * k} disagrees with a_{k}"
    for k in range(0, depth + 1):
        if (-1) ** k * tanh[2 * k + 1] != c[k]:
            return False, f"tanh(t) coefficient of t^{2 * k + 1} disagrees with c_{k}"
    return True, f"coth/tanh quotients match a_1..a_{depth}, c_0..c_{depth}"


def check_ode_residual(depth: int):
    order = 2 * depth + 2
    for kind in (series.COTH_TYPE, series.TANH_TYPE):
        res = series.ode_residual(kind, order)
        nz = [k for k, v in enumerate(res) if v != 0]
        if nz:
            return False, f"{kind} residual of u' + u^2 - 1 nonzero at t^{nz[0]}"
    return True, f"u' + u^2 - 1 vanishes through t^{order - 2} for both expansions"


def check_ratio_identity(depth: int):
    for k in range(1, depth + 1):
        r = coeffs.ratio_identity_check(k)
        if r != 4**k - 1:
            return False, f"f_{k}/e_{k} = {r}, expected {4 ** k - 1}"
    return True, f"f_k/e_k = 2^(2k) - 1 for k = 1..{depth}"


def check_bernoulli(depth: int):
    B = oracle.bernoulli_numbers(2 * depth)
    a = coeffs.coth_coefficients(depth)
    for k in range(1, depth + 1):
        if a[k] != abs(B[2 * k]) * 2 ** (2 * k - 1) / factorial(2 * k):
            return False, f"a_{k} != |B_{2 * k}| 2^{2 * k - 1}/({2 * k})!"
    return True, f"a_k = |B_2k| 2^(2k-1)/(2k)! for k = 1..{depth}"


def check_zeta_relations(depth: int):
    for k in range(1, min(depth, 3) + 1):
        res = engine.zeta_series(2 * k, 10)
        pik = oracle.pi_power(2 * k, 40)
        ref = coeffs.zeta_relation(k) * pik.value
        err = abs(res.total - ref)
        allowed = 10 * res.tail.error_estimate + coeffs.zeta_relation(k) * pik.error_bound + Fraction(1, 10**35)
        if err > allowed:
            return False, f"zeta({2 * k}) off from a_{k} pi^{2 * k} by {float(err):.3e}"
    return True, f"zeta(2k) = a_k pi^(2k) numerically for k = 1..{min(depth, 3)}"


def check_eta_ln2(depth: int):
    ln2 = oracle.compute_ln2(40)
    val = engine.eta_approx(1, 10)
    err = abs(val - ln2.value)
    if err > Fraction(1, 10**10):
        return False, f"eta(1) off from ln 2 by {float(err):.3e}"
    return True, f"eta(1) = ln 2 within {float(err):.1e}"


CHECKS: list[tuple[str, Callable[[int], tuple[bool, str]]]] = [
    ("known values", check_known_values),
    ("z/(e^z-1) expansion", check_same_sign_generating),
    ("1/(1+e^z) expansion", check_alternating_generating),
    ("even/odd quotients", check_ratio_series),
    ("ODE residual", check_ode_residual),
    ("ratio identity", check_ratio_identity),
    ("Bernoulli oracle", check_bernoulli),
    ("zeta relations", check_zeta_relations),
    ("eta(1) = ln 2", check_eta_ln2),
]


def run_checks(depth: int) -> list[CheckResult]:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    out = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn(depth)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail))
    return out
