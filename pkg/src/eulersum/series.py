"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` knows the coefficients of ``z**0 .. z**(order-1)``
and nothing beyond. Every binary operation takes the smaller of the two
orders, so lost precision always shows up in ``order`` instead of as silently
wrong high coefficients.

These series give a second route to the summation coefficients: the
generating functions ``z/(e**z - 1)`` and ``1/(1 + e**z)`` are expanded here
by plain division and compared against the recurrences in
:mod:`eulersum.coefficients`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

from .errors import SeriesDivisionError
from .exact import format_fraction

__all__ = [
    "PowerSeries",
    "ps_exp_z",
    "ps_add",
    "ps_mul",
    "ps_div",
    "ps_ratio_even_odd",
    "ode_residual",
    "bernoulli_generating",
    "alternating_generating",
    "COTH_TYPE",
    "TANH_TYPE",
]

COTH_TYPE = "coth"
TANH_TYPE = "tanh"

Scalar = Union[Fraction, int]


class PowerSeries:
    """Immutable truncated power series ``sum(c[k] * z**k for k < order)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Scalar]):
        self._coeffs = tuple(Fraction(c) for c in coefficients)

    @classmethod
    def zeros(cls, order: int) -> "PowerSeries":
        return cls([0] * order)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        if order < 1:
            raise ValueError("order must be >= 1")
        return cls([value] + [0] * (order - 1))

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: Scalar = 1) -> "PowerSeries":
        """``coefficient * z**degree`` truncated at ``order``."""
        coeffs = [Fraction(0)] * order
        if degree < order:
            coeffs[degree] = Fraction(coefficient)
        return cls(coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"PowerSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return PowerSeries(self._coeffs[:order])

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self._coeffs)
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise SeriesDivisionError("division of a series by zero")
            return PowerSeries(c / other for c in self._coeffs)
        if isinstance(other, PowerSeries):
            return ps_div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_div(other, self)

    def derivative(self) -> "PowerSeries":
        """Term-wise d/dz; the result has one fewer known coefficient."""
        return PowerSeries(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def substitute_scaled(self, factor: Scalar) -> "PowerSeries":
        """Coefficients of ``f(factor * z)``."""
        factor = Fraction(factor)
        return PowerSeries(c * factor**k for k, c in enumerate(self._coeffs))

    def leading_zeros(self) -> int:
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        return self.order

    def to_json(self) -> str:
        """Debug dump: JSON array of ``"num/den"`` strings."""
        return json.dumps([format_fraction(c) for c in self._coeffs])


def ps_exp_z(order: int) -> PowerSeries:
    """``e**z`` to ``order`` terms: coefficient of ``z**k`` is ``1/k!``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return PowerSeries(Fraction(1, factorial(k)) for k in range(order))


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(a[k] + b[k] for k in range(n))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return PowerSeries(out)


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Quotient ``q`` with ``q * b == a`` up to truncation.

    If ``b`` starts with ``s`` zero coefficients, ``a`` must start with at
    least ``s`` zeros as well; both prefixes are cancelled (this is how
    ``z / (e**z - 1)`` is formed) and the quotient loses ``s`` orders.
    """
    n = min(a.order, b.order)
    s = b.truncate(n).leading_zeros()
    if s >= n:
        raise SeriesDivisionError("divisor has no nonzero coefficient below the truncation order")
    if any(a[k] != 0 for k in range(s)):
        raise SeriesDivisionError(
            f"divisor starts with {s} zero coefficient(s) but the dividend does not cancel them"
        )
    num = a.coefficients[s:n]
    den = b.coefficients[s:n]
    lead = den[0]
    q: list[Fraction] = []
    for k in range(n - s):
        acc = num[k]
        for i in range(1, k + 1):
            if den[i]:
                acc -= den[i] * q[k - i]
        q.append(acc / lead)
    return PowerSeries(q)


def _cosh_sinh(order: int) -> tuple[PowerSeries, PowerSeries]:
    e = ps_exp_z(order)
    even = PowerSeries(c if k % 2 == 0 else 0 for k, c in enumerate(e))
    odd = PowerSeries(c if k % 2 == 1 else 0 for k, c in enumerate(e))
    return even, odd


def ps_ratio_even_odd(order: int, kind: str) -> PowerSeries:
    """Quotients of the even and odd parts of ``e**t``.

    ``kind="tanh"`` returns ``u = sinh(t)/cosh(t) = t - t**3/3 + ...``.
    ``kind="coth"`` returns ``t*u`` with ``u = cosh(t)/sinh(t)``, which is a
    genuine power series ``1 + t**2/3 - t**4/45 + ...``.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    if kind == TANH_TYPE:
        even, odd = _cosh_sinh(order)
        return ps_div(odd, even)
    if kind == COTH_TYPE:
        # t*cosh and sinh both vanish at t=0; one order is spent cancelling it.
        even, odd = _cosh_sinh(order + 1)
        t = PowerSeries.monomial(1, order + 1)
        return ps_div(t * even, odd)
    raise ValueError(f"unknown kind {kind!r}; expected 'coth' or 'tanh'")


def ode_residual(kind: str, order: int) -> PowerSeries:
    """Truncated residual of ``du/dt + u**2 - 1`` for either expansion.

    For the tanh-type expansion this is the residual itself. The coth-type
    expansion is held as ``w = t*u``, so the residual is reported multiplied
    by ``t**2``: ``t*w' - w + w**2 - t**2``. Either way the result carries
    ``order - 1`` coefficients and must vanish identically.
    """
    if kind == TANH_TYPE:
        u = ps_ratio_even_odd(order, TANH_TYPE)
        return u.derivative() + (u * u).truncate(order - 1) - 1
    if kind == COTH_TYPE:
        w = ps_ratio_even_odd(order, COTH_TYPE)
        t_w_prime = PowerSeries((0, *w.derivative().coefficients))
        res = t_w_prime - w + w * w - PowerSeries.monomial(2, order)
        return res.truncate(order - 1)
    raise ValueError(f"unknown kind {kind!r}; expected 'coth' or 'tanh'")


def bernoulli_generating(order: int) -> PowerSeries:
    """``z / (e**z - 1)`` to ``order`` terms, by prefix-cancelling division."""
    z = PowerSeries.monomial(1, order + 1)
    return ps_div(z, ps_exp_z(order + 1) - 1)


def alternating_generating(order: int) -> PowerSeries:
    """``1 / (1 + e**z)`` to ``order`` terms."""
    return ps_div(PowerSeries.constant(1, order), ps_exp_z(order) + 1)

