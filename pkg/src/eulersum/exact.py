"""Exact rational scalars.

``Rational`` is :class:`fractions.Fraction`: arbitrary-precision, always
stored in lowest terms with the sign on the numerator and zero as ``0/1``.
The ``rat_*`` helpers exist so callers can be explicit about exact field
arithmetic; ``rat_to_decimal`` renders a value without going through binary
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "as_rational",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_to_decimal",
    "format_fraction",
]

Rational = Fraction

RationalLike = Union[Fraction, int]


def as_rational(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Rational."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(value)


def rat_add(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_sub(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) - Fraction(b)


def rat_mul(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_div(a: RationalLike, b: RationalLike) -> Fraction:
    """Exact quotient; raises ``ZeroDivisionError`` when ``b == 0``."""
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return Fraction(a) / b


def rat_to_decimal(a: RationalLike, digits: int) -> str:
    """Render ``a`` with exactly ``digits`` fractional digits.

    Rounding is round-half-even and is done in integer arithmetic, so the
    result is the correctly rounded decimal of the exact value. A value that
    rounds to zero is printed without a minus sign.

    >>> rat_to_decimal(Fraction(1, 6), 10)
    '0.1666666667'
    >>> rat_to_decimal(Fraction(-5, 2), 0)
    Traceback (most recent call last):
        ...
    ValueError: digits must be >= 1
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    a = Fraction(a)
    scale = 10**digits
    q, r = divmod(abs(a.numerator) * scale, a.denominator)
    twice = 2 * r
    if twice > a.denominator or (twice == a.denominator and q % 2 == 1):
        q += 1
    int_part, frac_part = divmod(q, scale)
    sign = "-" if a < 0 and q != 0 else ""
    return f"{sign}{int_part}.{frac_part:0{digits}d}"


def format_fraction(a: RationalLike) -> str:
    """``"num/den"`` form used in CSV/JSON output (integers get ``/1``)."""
    a = Fraction(a)
    return f"{a.numerator}/{a.denominator}"
