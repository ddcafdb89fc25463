"""Independent reference values for verification.

Nothing here uses the summation engine or the coefficient recurrences.
Constants come from classical series evaluated in exact rationals, each
with a rigorous truncation bound:

* pi      Machin: 16 atan(1/5) - 4 atan(1/239), alternating tails
* ln 2    sum 1/(k 2**k), geometric tail
* zeta(3) Apery: 5/2 sum (-1)**(k+1) / (k**3 binom(2k, k)), alternating tail

``naive_partial_sum`` is the brute-force baseline. Long sums are formed by
binary splitting over gmpy2 integers and reduced once at the end; the exact
result of 10**5 terms of 1/k**4 has a ~580 kbit denominator, which plain
``Fraction`` accumulation cannot reach in reasonable time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import gmpy2

from .exact import rat_to_decimal
from .terms import TermFamily

__all__ = [
    "ReferenceConstant",
    "compute_pi",
    "compute_ln2",
    "compute_zeta3",
    "pi_power",
    "naive_partial_sum",
    "tail_bracket",
    "bernoulli_numbers",
]


@dataclass(frozen=True)
class ReferenceConstant:
    """``value`` is within ``error_bound`` of the true constant."""

    name: str
    value: Fraction
    error_bound: Fraction

    def contains(self, x, slack=0) -> bool:
        return abs(Fraction(x) - self.value) <= self.error_bound + Fraction(slack)

    def decimal(self, digits: int) -> str:
        return rat_to_decimal(self.value, digits)


def _target(digits: int) -> Fraction:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return Fraction(1, 10 ** (digits + 2))


def _atan_inv(m: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """atan(1/m) and a bound on the truncation error (first omitted term)."""
    total = Fraction(0)
    j = 0
    while True:
        t = Fraction(1, (2 * j + 1) * m ** (2 * j + 1))
        if t <= tol:
            return total, t
        total += t if j % 2 == 0 else -t
        j += 1


def compute_pi(digits: int) -> ReferenceConstant:
    tol = _target(digits)
    a, ea = _atan_inv(5, tol / 32)
    b, eb = _atan_inv(239, tol / 8)
    return ReferenceConstant("PI", 16 * a - 4 * b, 16 * ea + 4 * eb)


def compute_ln2(digits: int) -> ReferenceConstant:
    tol = _target(digits)
    total = Fraction(0)
    k = 1
    # tail after k-1 terms: sum_{j>=k} 1/(j 2^j) <= 1/(k 2^(k-1))
    while Fraction(1, k * 2 ** (k - 1)) > tol:
        total += Fraction(1, k * 2**k)
        k += 1
    return ReferenceConstant("LN2", total, Fraction(1, k * 2 ** (k - 1)))


def compute_zeta3(digits: int) -> ReferenceConstant:
    tol = _target(digits)
    total = Fraction(0)
    k = 1
    while True:
        t = Fraction(5, 2 * k**3 * comb(2 * k, k))
        if t <= tol:
            return ReferenceConstant("ZETA3", total, t)
        total += t if k % 2 == 1 else -t
        k += 1


def pi_power(power: int, digits: int) -> ReferenceConstant:
    """``pi**power`` with the error of the pi approximation propagated."""
    pi = compute_pi(digits + power)
    value = pi.value**power
    hi = pi.value + pi.error_bound
    # |p**m - q**m| <= m * max(p, q)**(m-1) * |p - q|
    bound = power * hi ** (power - 1) * pi.error_bound
    return ReferenceConstant(f"PI^{power}", value, bound)


def _split_sum(fracs: list[tuple[int, int]], lo: int, hi: int):
    if hi - lo == 1:
        p, q = fracs[lo]
        return gmpy2.mpz(p), gmpy2.mpz(q)
    mid = (lo + hi) // 2
    p1, q1 = _split_sum(fracs, lo, mid)
    p2, q2 = _split_sum(fracs, mid, hi)
    return p1 * q2 + p2 * q1, q1 * q2


def naive_partial_sum(term: TermFamily, x_start: int, terms: int, alternating: bool = False) -> Fraction:
    """Literal sum of ``terms`` consecutive terms ``X(x_start) +- X(x_start+1) ...``."""
    if terms < 0:
        raise ValueError("terms must be >= 0")
    if terms == 0:
        return Fraction(0)
    fracs = []
    for j in range(terms):
        v = Fraction(term.value(x_start + j))
        if alternating and j % 2 == 1:
            v = -v
        fracs.append((v.numerator, v.denominator))
    p, q = _split_sum(fracs, 0, terms)
    g = gmpy2.gcd(p, q)
    return Fraction(int(p // g), int(q // g))


def tail_bracket(term: TermFamily, x: int, terms: int) -> tuple[Fraction, Fraction]:
    """Bounds on ``X(x) + X(x+1) + ...`` for a positive decreasing term.

    The lower bound is the first ``terms`` terms; the rest is at most
    ``int_{x+terms-1}^inf X``.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    lo = naive_partial_sum(term, x, terms)
    rest = term.tail_integral(x + terms - 1)
    if rest is None:
        raise ValueError("bracket needs a term with a tail integral")
    return lo, lo + Fraction(rest)


def bernoulli_numbers(n: int) -> list[Fraction]:
    """``B_0 .. B_n`` from ``sum_{j=0}^{m} binom(m+1, j) B_j = 0`` (``B_1 = -1/2``)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    B = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, j) * B[j] for j in range(m))
        B.append(-s / (m + 1))
    return B
