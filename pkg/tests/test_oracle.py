from fractions import Fraction

import mpmath
import pytest

from eulersum.engine import SAME_SIGN, tail_sum
from eulersum.exact import rat_to_decimal
from eulersum.oracle import (
    compute_ln2,
    compute_pi,
    compute_zeta3,
    naive_partial_sum,
    pi_power,
    tail_bracket,
)
from eulersum.terms import PowerTerm

F = Fraction
mpmath.mp.dps = 80


def mp_fraction(x):
    """Exact Fraction of an mpmath value (its binary mantissa is finite)."""
    man, exp = mpmath.mpf(x).man_exp
    return F(int(man)) * F(2) ** int(exp)


@pytest.mark.parametrize("digits", [1, 2, 10, 30, 60])
def test_pi_within_bound(digits):
    pi = compute_pi(digits)
    assert pi.error_bound <= F(1, 10 ** (digits + 2))
    assert abs(pi.value - mp_fraction(mpmath.pi)) <= pi.error_bound + F(1, 10**75)


def test_pi_renders():
    pi = compute_pi(10)
    assert abs(pi.value - F("3.1415926535")) < F(1, 10**10)
    assert pi.decimal(10) == "3.1415926536"
    assert abs(compute_pi(1).value - F("3.1")) < F(1, 10)


def test_pi_squared_over_six():
    p2 = pi_power(2, 20)
    assert rat_to_decimal(p2.value / 6, 15) == "1.644934066848226"
    assert p2.error_bound < F(1, 10**20)


@pytest.mark.parametrize("digits", [2, 10, 40])
def test_ln2_within_bound(digits):
    ln2 = compute_ln2(digits)
    assert ln2.error_bound <= F(1, 10 ** (digits + 2))
    assert abs(ln2.value - mp_fraction(mpmath.log(2))) <= ln2.error_bound + F(1, 10**75)


def test_ln2_renders():
    assert compute_ln2(10).decimal(10) == "0.6931471806"
    assert compute_ln2(2).decimal(2) == "0.69"
    v = compute_ln2(10).value
    assert 2 * v == v + v


def test_zeta3_within_bound():
    z3 = compute_zeta3(40)
    assert abs(z3.value - mp_fraction(mpmath.zeta(3))) <= z3.error_bound + F(1, 10**75)


@pytest.mark.parametrize("factory", [compute_pi, compute_ln2, compute_zeta3])
def test_doubling_digits_stays_in_bound(factory):
    for d in (5, 10, 20):
        coarse, fine = factory(d), factory(2 * d)
        assert abs(coarse.value - fine.value) <= coarse.error_bound + fine.error_bound
        assert fine.contains(coarse.value, coarse.error_bound)


def test_naive_partial_sum_small():
    assert naive_partial_sum(PowerTerm(2), 10, 3) == F(1, 100) + F(1, 121) + F(1, 144)
    assert naive_partial_sum(PowerTerm(2), 10, 0) == 0
    assert naive_partial_sum(PowerTerm(1), 1, 4, alternating=True) == F(7, 12)


def test_naive_matches_direct_sum():
    direct = sum(F(1, k**3) for k in range(7, 307))
    assert naive_partial_sum(PowerTerm(3), 7, 300) == direct


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tail_sum_inside_bracket(n):
    lo, hi = tail_bracket(PowerTerm(n), 10, 10**5)
    tail = tail_sum(PowerTerm(n), 10, SAME_SIGN).value
    assert lo < tail < hi
    # the first omitted naive term is smaller than the bracket width
    assert PowerTerm(n).value(10 + 10**5) < hi - lo


def test_negative_terms_rejected():
    with pytest.raises(ValueError):
        naive_partial_sum(PowerTerm(2), 10, -1)
