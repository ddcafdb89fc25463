from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulersum.errors import SeriesDivisionError
from eulersum.series import (
    COTH_TYPE,
    TANH_TYPE,
    PowerSeries,
    alternating_generating,
    bernoulli_generating,
    ode_residual,
    ps_add,
    ps_div,
    ps_exp_z,
    ps_mul,
    ps_ratio_even_odd,
)

F = Fraction


def cauchy(a, b, n):
    """Plain double loop over all index pairs, kept separate from ps_mul."""
    out = [F(0)] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[:n]):
            if i + j < n:
                out[i + j] += x * y
    return out


def long_divide(num, den, n):
    """Quotient by repeatedly subtracting multiples of den from a remainder."""
    rem = list(num[:n])
    q = []
    for k in range(n):
        c = rem[k] / den[0]
        q.append(c)
        for j in range(len(den)):
            if k + j < n:
                rem[k + j] -= c * den[j]
    return q


def test_exp_examples():
    assert list(ps_exp_z(5)) == [1, 1, F(1, 2), F(1, 6), F(1, 24)]
    assert list(ps_exp_z(1)) == [1]
    assert ps_exp_z(8)[6] == F(1, 720)


def test_exp_rejects_zero_order():
    with pytest.raises(ValueError):
        ps_exp_z(0)


def test_mul_examples():
    a = PowerSeries([1, 1, 0])
    b = PowerSeries([1, -1, 0])
    assert list(ps_mul(a, b)) == [1, 0, -1]
    assert a * PowerSeries.constant(1, 3) == a


def test_exp_times_exp_neg():
    e = ps_exp_z(10)
    e_neg = e.substitute_scaled(-1)
    expected = cauchy(list(e), list(e_neg), 10)
    assert expected == [1] + [0] * 9
    assert list(ps_mul(e, e_neg)) == expected


def test_truncation_order_is_min():
    a = ps_exp_z(7)
    b = ps_exp_z(4)
    assert ps_add(a, b).order == 4
    assert ps_mul(a, b).order == 4
    assert (a / b).order == 4


def test_bernoulli_generating_function():
    v = bernoulli_generating(6)
    assert list(v) == [1, F(-1, 2), F(1, 12), 0, F(-1, 720), 0]


def test_alternating_generating_function():
    v = alternating_generating(6)
    expected = [F(1, 2), F(-1, 4), 0, F(1, 48), 0, F(-1, 480)]
    den = [2] + [F(1, factorial(k)) for k in range(1, 6)]
    assert long_divide([F(1)] + [F(0)] * 5, den, 6) == expected
    assert list(v) == expected
    # V = 1/2 - z/4 + (A/16) z^3 - (B/64) z^5 with A = 1/3, B = 2/15
    assert v[3] == F(1, 3) / 16 and v[5] == -F(2, 15) / 64


def test_div_identity():
    a = ps_exp_z(6)
    assert a / PowerSeries.constant(1, 6) == a


def test_div_zero_prefix_must_cancel():
    with pytest.raises(SeriesDivisionError):
        ps_div(PowerSeries([1, 1, 1]), PowerSeries([0, 1, 1]))
    with pytest.raises(SeriesDivisionError):
        ps_div(PowerSeries([1, 1]), PowerSeries([0, 0]))


def test_div_prefix_cancellation_loses_orders():
    num = PowerSeries([0, 0, 1, 2, 3])
    den = PowerSeries([0, 0, 1, 0, 0])
    q = ps_div(num, den)
    assert list(q) == [1, 2, 3]


series_coeffs = st.lists(st.fractions(max_denominator=50).filter(lambda f: abs(f) < 50), min_size=1, max_size=10)


@given(series_coeffs, series_coeffs)
def test_div_then_mul_roundtrip(a, b):
    n = min(len(a), len(b))
    b = [F(1) if b[0] == 0 else b[0]] + b[1:]
    A, B = PowerSeries(a[:n]), PowerSeries(b[:n])
    q = ps_div(A, B)
    assert q * B == A
    assert list(q) == long_divide(a[:n], b[:n], n)


@given(series_coeffs, series_coeffs)
def test_mul_matches_cauchy(a, b):
    n = min(len(a), len(b))
    assert list(ps_mul(PowerSeries(a), PowerSeries(b))) == cauchy(a, b, n)


def test_tanh_type():
    assert list(ps_ratio_even_odd(8, TANH_TYPE)) == [0, 1, 0, F(-1, 3), 0, F(2, 15), 0, F(-17, 315)]


def test_coth_type():
    w = ps_ratio_even_odd(6, COTH_TYPE)
    # independent: (cosh t) / (sinh t / t) by long division
    num = [F(1, factorial(k)) if k % 2 == 0 else F(0) for k in range(6)]
    den = [F(1, factorial(k + 1)) if k % 2 == 0 else F(0) for k in range(6)]
    assert long_divide(num, den, 6) == [1, 0, F(1, 3), 0, F(-1, 45), 0]
    assert list(w) == [1, 0, F(1, 3), 0, F(-1, 45), 0]
    assert w[0] == 1


def test_ratio_kind_validation():
    with pytest.raises(ValueError):
        ps_ratio_even_odd(1, TANH_TYPE)
    with pytest.raises(ValueError):
        ps_ratio_even_odd(6, "sech")


@pytest.mark.parametrize("kind", [COTH_TYPE, TANH_TYPE])
@pytest.mark.parametrize("order", [2, 5, 12, 24])
def test_ode_residual_vanishes(kind, order):
    res = ode_residual(kind, order)
    assert res.order == order - 1
    assert all(c == 0 for c in res)


def test_ode_residual_detects_wrong_series():
    # sanity: the residual is not trivially zero for a perturbed tanh
    u = ps_ratio_even_odd(8, TANH_TYPE) + PowerSeries.monomial(5, 8, F(1, 1000))
    res = u.derivative() + (u * u).truncate(7) - 1
    assert any(c != 0 for c in res)


@pytest.mark.parametrize("order", [3, 10, 21])
def test_parity(order):
    w = ps_ratio_even_odd(order, COTH_TYPE)
    u = ps_ratio_even_odd(order, TANH_TYPE)
    assert all(c == 0 for k, c in enumerate(w) if k % 2 == 1)
    assert all(c == 0 for k, c in enumerate(u) if k % 2 == 0)


@pytest.mark.parametrize("order", [1, 4, 17])
def test_generating_identities(order):
    v = bernoulli_generating(order)
    e_minus_1_over_z = PowerSeries((ps_exp_z(order + 1) - 1).coefficients[1:])
    assert v * e_minus_1_over_z == PowerSeries.constant(1, order)
    w = alternating_generating(order)
    assert w * (ps_exp_z(order) + 1) == PowerSeries.constant(1, order)


def test_json_dump():
    assert ps_exp_z(3).to_json() == '["1/1", "1/1", "1/2"]'
