"""
Sums of reciprocal powers with the split at x = 10
==================================================

Add the first nine terms of ``1 + 1/2^n + 1/3^n + ...`` directly, then
replace everything from ``1/10^n`` on by the accelerated tail. A handful
of derivative terms give more than ten correct digits.

The second half shows why the order has to be chosen: the tail expansion is
asymptotic, so at a small split point the terms eventually grow again.
Plotting needs matplotlib; without it the script only prints.
"""

from fractions import Fraction

from eulersum import AUTO, rat_to_decimal, zeta_approx
from eulersum.engine import SAME_SIGN, tail_sum, zeta_series
from eulersum.oracle import compute_pi, compute_zeta3
from eulersum.terms import PowerTerm

pi = compute_pi(40).value
reference = {2: pi**2 / 6, 3: compute_zeta3(40).value, 4: pi**4 / 90, 6: pi**6 / 945}

###############################################################################
# Errors against independent references, for a few truncation orders.

print(f"{'n':>2} {'K':>4}  {'value':<34} {'|error|':>10} {'estimate':>10}")
for n, ref in reference.items():
    for K in (1, 3, 5, AUTO):
        res = zeta_series(n, 10, K)
        err = abs(res.total - ref)
        print(f"{n:>2} {str(K):>4}  {rat_to_decimal(res.total, 30):<34} "
              f"{float(err):>10.2e} {float(res.tail.error_estimate):>10.2e}")

###############################################################################
# The exact rational behind zeta(2) at K = 5:

z2 = zeta_approx(2, 10, 5)
print("zeta(2) ~", z2.numerator, "/", z2.denominator)

###############################################################################
# Asymptotic behaviour: magnitude of the k-th derivative term at x = 1 and
# x = 3. At x = 1 the terms bottom out almost immediately; AUTO stops there.

magnitudes = {}
for x in (1, 3):
    res = tail_sum(PowerTerm(2), x, SAME_SIGN, 14)
    magnitudes[x] = [abs(float(v)) for label, v in res.contributions if label.startswith("d")]
    auto = tail_sum(PowerTerm(2), x, SAME_SIGN, AUTO)
    print(f"x={x}: AUTO keeps {auto.order_used} terms, estimate {float(auto.error_estimate):.2e}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for x, mags in magnitudes.items():
        ax.semilogy(range(1, len(mags) + 1), mags, "o-", label=f"x = {x}")
    ax.set_xlabel("k (term with derivative order 2k-1)")
    ax.set_ylabel("|term|")
    ax.legend()
    fig.savefig("zeta_terms.png", dpi=100)
    print("wrote zeta_terms.png")

assert abs(zeta_approx(2, 10, 5) - reference[2]) < Fraction(1, 10**10)
