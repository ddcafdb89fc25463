"""
Alternating series
==================

``1 - 1/2 + 1/3 - 1/4 + ...`` converges to ln 2 so slowly that a million
terms give six digits. Summing nine terms and accelerating the rest gives
fourteen.
"""

from eulersum import ALTERNATING, PowerTerm, rat_to_decimal
from eulersum.engine import eta_series, evaluate_series
from eulersum.oracle import compute_ln2, compute_pi, naive_partial_sum

ln2 = compute_ln2(40).value

###############################################################################
# Brute force for comparison.

for terms in (10, 100, 1000):
    s = naive_partial_sum(PowerTerm(1), 1, terms, alternating=True)
    print(f"{terms:>5} plain terms: error {float(abs(s - ln2)):.2e}")

###############################################################################
# Head of nine terms plus the accelerated tail. The tail from index 10 enters
# with a minus sign because term 10 is subtracted in the full series.

for K in (1, 2, 4, 8, "auto"):
    res = eta_series(1, 10, K)
    print(f"K={K!s:>4}: {rat_to_decimal(res.total, 20)}  error {float(abs(res.total - ln2)):.2e}"
          f"  (tail sign {res.tail_sign:+d})")

###############################################################################
# eta(2) = pi^2/12, and the split point can move freely.

pi = compute_pi(40).value
for x in (2, 5, 10, 20):
    res = evaluate_series(PowerTerm(2), x, ALTERNATING, 6)
    print(f"eta(2), split {x:>2}: error {float(abs(res.total - pi**2 / 12)):.2e}")
