"""
Coefficient tables and their cross-checks
=========================================

Both summation formulas are driven by two families of exact rationals.
This script builds them from their recurrences, then confirms them three
independent ways: by dividing power series, through Bernoulli numbers, and
through the integer ratios between the two weight families.
"""

from fractions import Fraction
from math import factorial

from eulersum import coth_coefficients, engine_weights, rat_to_decimal, tanh_coefficients
from eulersum.oracle import bernoulli_numbers
from eulersum.series import bernoulli_generating, ps_ratio_even_odd

###############################################################################
# The coth family ``a_k`` (1/6, 1/90, 1/945, ...) comes out of
# ``(4k+2) a_k = 4 sum_{i+j=k} a_i a_j``. Thirty-four terms take a few
# milliseconds; numerators and denominators grow quickly.

a = coth_coefficients(34)
for k in (1, 2, 3, 4, 5, 10, 34):
    v = a[k]
    shown = str(v) if len(str(v)) < 30 else f"<{v.denominator.bit_length()}-bit denominator>"
    print(f"a_{k:<2} = {shown:>30}  ~ {float(v):.15e}")

###############################################################################
# The tanh family ``c_k`` (1, 1/3, 2/15, 17/315, 62/2835, ...).

c = tanh_coefficients(6)
print("c_0..c_5 =", ", ".join(str(v) for v in c))

###############################################################################
# First check: the same numbers fall out of plain power-series division.
# ``t*coth(t) = 1 + 2 a_1 t^2 - 2 a_2 t^4 + ...``

w = ps_ratio_even_odd(14, "coth")
from_series = [(-1) ** (k + 1) * w[2 * k] / 2 for k in range(1, 7)]
print("series route agrees:", from_series == [a[k] for k in range(1, 7)])

v = bernoulli_generating(8)
print("z/(e^z - 1) =", v)

###############################################################################
# Second check: ``a_k = |B_2k| 2^(2k-1) / (2k)!`` with Bernoulli numbers from
# their own classical recurrence.

B = bernoulli_numbers(40)
ok = all(a[k] == abs(B[2 * k]) * 2 ** (2 * k - 1) / factorial(2 * k) for k in range(1, 21))
print("Bernoulli route agrees for k <= 20:", ok)

###############################################################################
# Third check: the alternating weights are integer multiples of the
# same-sign ones, ``f_k = (4^k - 1) e_k``.

weights = engine_weights(10)
for k in range(1, 11):
    ratio = weights.f(k) / weights.e(k)
    assert ratio == Fraction(4**k - 1)
    print(f"k={k:<2}  e_k = {str(weights.e(k)):>28}   f_k / e_k = {ratio}")
