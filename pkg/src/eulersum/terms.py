"""Series terms ``X(x)`` as seen by the summation engine.

The engine only needs four things from a term: its value, its derivatives
(with respect to a unit step in ``x``), the tail integral
``int_x^inf X(t) dt`` for same-sign series, and whether that integral
exists. :class:`PowerTerm` supplies all of them exactly; :class:`FunctionTerm`
wraps user callables for anything else.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Callable, Optional, Union

from .errors import DivergenceError, PoleError

__all__ = [
    "Scalar",
    "TermFamily",
    "PowerTerm",
    "FunctionTerm",
    "power_value",
    "power_derivative",
    "power_tail_integral",
    "head_sum",
]

Scalar = Union[Fraction, Decimal]


class TermFamily(abc.ABC):
    """Abstract series term.

    Subclasses return exact :class:`~fractions.Fraction` values where they
    can and :class:`~decimal.Decimal` values otherwise.
    """

    @property
    @abc.abstractmethod
    def supports_case1(self) -> bool:
        """True when the same-sign series converges, i.e. the tail integral exists."""

    @abc.abstractmethod
    def derivative(self, m: int, x) -> Scalar:
        """``m``-th derivative of ``X`` at ``x``; ``m = 0`` is the value."""

    def value(self, x) -> Scalar:
        return self.derivative(0, x)

    def tail_integral(self, x) -> Optional[Scalar]:
        """``int_x^inf X(t) dt``, or None when not available."""
        return None

    @property
    def is_exact(self) -> bool:
        return False


def power_value(n: int, x: int) -> Fraction:
    """``1 / x**n``."""
    if x == 0:
        raise PoleError("1/x**n has a pole at x = 0")
    return Fraction(1, x**n)


def power_derivative(n: int, m: int, x: int) -> Fraction:
    """``(-1)**m * n (n+1) ... (n+m-1) / x**(n+m)``."""
    if m < 0:
        raise ValueError("derivative order must be >= 0")
    if x == 0:
        raise PoleError("1/x**n has a pole at x = 0")
    rising = 1
    for j in range(m):
        rising *= n + j
    return Fraction((-1) ** m * rising, x ** (n + m))


def power_tail_integral(n: int, x: int) -> Fraction:
    """``int_x^inf t**-n dt = 1 / ((n-1) x**(n-1))``, defined for ``n >= 2``."""
    if n < 2:
        raise DivergenceError(f"sum of 1/x**{n} diverges: tail integral requires n >= 2")
    if x <= 0:
        raise PoleError("tail integral of 1/x**n needs x > 0")
    return Fraction(1, (n - 1) * x ** (n - 1))


@dataclass(frozen=True)
class PowerTerm(TermFamily):
    """``X(x) = 1 / x**n`` for an integer ``n >= 1``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("PowerTerm exponent must be an integer >= 1")

    @property
    def supports_case1(self) -> bool:
        return self.n >= 2

    @property
    def is_exact(self) -> bool:
        return True

    def value(self, x) -> Fraction:
        return power_value(self.n, x)

    def derivative(self, m: int, x) -> Fraction:
        return power_derivative(self.n, m, x)

    def tail_integral(self, x) -> Fraction:
        return power_tail_integral(self.n, x)


class FunctionTerm(TermFamily):
    """A term defined by user-supplied callables.

    ``derivative(m, x)`` must return the m-th derivative at ``x`` (m = 0 is
    the value). ``tail_integral(x)``, if given, makes the term usable for
    same-sign series. Return Fractions for an exact path (and pass
    ``exact=True``) or Decimals computed at the caller's working precision.
    """

    def __init__(
        self,
        derivative: Callable[[int, object], Scalar],
        tail_integral: Optional[Callable[[object], Scalar]] = None,
        *,
        exact: bool = False,
        name: str = "X",
    ):
        self._derivative = derivative
        self._tail_integral = tail_integral
        self._exact = exact
        self.name = name

    @property
    def supports_case1(self) -> bool:
        return self._tail_integral is not None

    @property
    def is_exact(self) -> bool:
        return self._exact

    def derivative(self, m: int, x) -> Scalar:
        if m < 0:
            raise ValueError("derivative order must be >= 0")
        return self._derivative(m, x)

    def tail_integral(self, x) -> Optional[Scalar]:
        if self._tail_integral is None:
            return None
        return self._tail_integral(x)

    def __repr__(self) -> str:
        return f"FunctionTerm({self.name!r}, exact={self._exact})"


def head_sum(term: TermFamily, x: int, alternating: bool = False) -> Scalar:
    """``X(1) + X(2) + ... + X(x-1)``, or ``X(1) - X(2) + ...`` when alternating.

    ``x = 1`` gives the empty sum.
    """
    if x < 1:
        raise ValueError("split point x must be >= 1")
    total: Scalar = Fraction(0)
    for k in range(1, x):
        v = term.value(k)
        if alternating and k % 2 == 0:
            v = -v
        total = v if k == 1 else total + v
    return total
