"""
A user-supplied term: zeta(3/2)
===============================

``PowerTerm`` only covers integer exponents, which keeps everything exact.
Any other term can be described by a derivative callable (plus a tail
integral for same-sign sums). Here ``X(x) = x^(-3/2)`` is evaluated with
``decimal`` at 50 significant digits.
"""

from decimal import Decimal, getcontext

from eulersum import FunctionTerm, head_sum
from eulersum.engine import SAME_SIGN, evaluate_series

getcontext().prec = 50
s = Decimal(3) / 2


def derivative(m, x):
    # (-1)^m s (s+1) ... (s+m-1) x^(-s-m)
    coef = Decimal(1)
    for j in range(m):
        coef *= s + j
    return (-1) ** m * coef * Decimal(x) ** (-s - m)


def tail_integral(x):
    return Decimal(x) ** (1 - s) / (s - 1)


term = FunctionTerm(derivative, tail_integral, name="x^(-3/2)")

res = evaluate_series(term, 10, SAME_SIGN, "auto", precision=50)
print("head (9 terms):", head_sum(term, 10))
print("zeta(3/2)     ~", res.total)
print("order used    :", res.tail.order_used, " estimate", f"{res.tail.error_estimate:.2e}")

try:
    import mpmath
except ImportError:
    mpmath = None

if mpmath is not None:
    mpmath.mp.dps = 50
    print("mpmath        :", mpmath.zeta(1.5))
