"""Accelerated tail sums.

For a term ``X`` and a start index ``x``::

    SAME_SIGN:    X(x) + X(x+1) + ...  ~  int_x^inf X + X/2 + sum_k e_k X^(2k-1)(x)
    ALTERNATING:  X(x) - X(x+1) + ...  ~  X/2 + sum_k f_k X^(2k-1)(x)

Both expansions are asymptotic, so the order matters. With ``order=AUTO``
the truncation stops where the next term is smallest (up to ``max_order``),
and the magnitude of that first omitted term is reported as the error
estimate. It is a heuristic, not a bound.

A full series is assembled as head + tail: the first ``x - 1`` terms are
added directly and the tail from index ``x`` is accelerated.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Union

from .coefficients import engine_weights
from .errors import DivergenceError
from .exact import rat_to_decimal
from .terms import PowerTerm, Scalar, TermFamily, head_sum

__all__ = [
    "SAME_SIGN",
    "ALTERNATING",
    "AUTO",
    "DEFAULT_MAX_ORDER",
    "TailSumRequest",
    "TailSumResult",
    "SeriesResult",
    "tail_sum",
    "evaluate_series",
    "sum_series",
    "zeta_approx",
    "eta_approx",
    "zeta_series",
    "eta_series",
    "to_fraction",
]

SAME_SIGN = "same_sign"
ALTERNATING = "alternating"
AUTO = "auto"
DEFAULT_MAX_ORDER = 16
DEFAULT_PRECISION = 50

Order = Union[int, str]


def to_fraction(v: Scalar) -> Fraction:
    """Exact Fraction for a Fraction, int or finite Decimal."""
    return Fraction(v)


def _scale(weight: Fraction, v: Scalar) -> Scalar:
    if isinstance(v, Decimal):
        return Decimal(weight.numerator) / Decimal(weight.denominator) * v
    return weight * v


@dataclass(frozen=True)
class TailSumRequest:
    term: TermFamily
    x: int
    case: str = SAME_SIGN
    order: Order = AUTO
    max_order: int = DEFAULT_MAX_ORDER
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.x < 1:
            raise ValueError("start index x must be >= 1")
        if self.case not in (SAME_SIGN, ALTERNATING):
            raise ValueError(f"unknown case {self.case!r}")
        if self.order != AUTO and (not isinstance(self.order, int) or self.order < 0):
            raise ValueError("order must be a non-negative integer or 'auto'")
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if self.case == SAME_SIGN and not self.term.supports_case1:
            raise DivergenceError(
                f"{self.term!r} has no finite tail integral; the same-sign series diverges"
            )

    def run(self) -> "TailSumResult":
        return tail_sum(
            self.term,
            self.x,
            self.case,
            self.order,
            max_order=self.max_order,
            precision=self.precision,
        )


@dataclass
class TailSumResult:
    """Accelerated tail value with its term-by-term breakdown.

    ``contributions`` lists ``(label, value)`` pairs whose sum is ``value``.
    ``capped`` is set when AUTO order ran into ``max_order`` while the terms
    were still shrinking, i.e. more terms would have helped.
    """

    value: Scalar
    contributions: list[tuple[str, Scalar]]
    error_estimate: Scalar
    order_used: int
    case: str
    capped: bool = False

    @property
    def is_exact(self) -> bool:
        return isinstance(self.value, Fraction)

    def to_dict(self, digits: int) -> dict:
        return _result_dict(self.value, self.error_estimate, self.order_used,
                            self.contributions, digits)


@dataclass
class SeriesResult:
    """Head + signed tail for a whole series starting at index 1."""

    total: Scalar
    head: Scalar
    tail: TailSumResult
    split: int
    tail_sign: int = 1
    extra: dict = field(default_factory=dict)

    def to_dict(self, digits: int) -> dict:
        out = _result_dict(self.total, self.tail.error_estimate, self.tail.order_used,
                           self.tail.contributions, digits)
        out["split"] = self.split
        out["head_decimal"] = rat_to_decimal(to_fraction(self.head), digits)
        out["tail_sign"] = self.tail_sign
        out["capped"] = self.tail.capped
        return out


def _result_dict(value, error, order_used, contributions, digits) -> dict:
    out = {"value_decimal": rat_to_decimal(to_fraction(value), digits)}
    if isinstance(value, Fraction):
        out["value_rational"] = {"num": str(value.numerator), "den": str(value.denominator)}
    out["order_used"] = order_used
    out["error_estimate_decimal"] = _render_error(to_fraction(error), digits)
    out["contributions"] = [
        {"label": label, "decimal": rat_to_decimal(to_fraction(v), digits)}
        for label, v in contributions
    ]
    return out


def _render_error(err: Fraction, digits: int) -> str:
    # An estimate below the display resolution would print as 0.000...; use
    # scientific notation so it stays informative.
    if err == 0:
        return "0"
    return f"{Decimal(err.numerator) / Decimal(err.denominator):.3e}"


def _derivative_terms(term: TermFamily, x, weights, count: int) -> list[Scalar]:
    return [_scale(weights[k - 1], term.derivative(2 * k - 1, x)) for k in range(1, count + 1)]


def _choose_order(terms: list[Scalar], cap: int) -> tuple[int, bool]:
    """Smallest K in [0, cap] minimising |terms[K]| (the first omitted term)."""
    mags = [abs(t) for t in terms[: cap + 1]]
    best = min(range(len(mags)), key=lambda k: (mags[k], k))
    capped = best == cap and cap > 0 and mags[cap] < mags[cap - 1]
    return best, capped


def tail_sum(
    term: TermFamily,
    x: int,
    case: str = SAME_SIGN,
    order: Order = AUTO,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    precision: int = DEFAULT_PRECISION,
) -> TailSumResult:
    """Accelerated value of ``X(x) +- X(x+1) + ...``.

    ``order`` is the number K of derivative terms kept, or ``AUTO``. The
    ``max_order`` cap only limits AUTO. ``precision`` (significant decimal
    digits) applies when the term returns Decimals.
    """
    TailSumRequest(term, x, case, order, max_order, precision)  # validation
    with decimal.localcontext() as ctx:
        ctx.prec = precision
        count = (max_order if order == AUTO else order) + 1
        weights = engine_weights(count)
        table = weights.case1 if case == SAME_SIGN else weights.case2
        terms = _derivative_terms(term, x, table, count)

        capped = False
        if order == AUTO:
            used, capped = _choose_order(terms, max_order)
        else:
            used = order

        contributions: list[tuple[str, Scalar]] = []
        if case == SAME_SIGN:
            integral = term.tail_integral(x)
            if integral is None:
                raise DivergenceError(f"{term!r} provides no tail integral")
            contributions.append(("integral", integral))
        value_x = term.value(x)
        contributions.append(("half", value_x / 2))
        for k in range(1, used + 1):
            contributions.append((f"d{2 * k - 1}", terms[k - 1]))

        total = contributions[0][1]
        for _, v in contributions[1:]:
            total = total + v
        error = abs(terms[used])
    return TailSumResult(total, contributions, error, used, case, capped)


def evaluate_series(
    term: TermFamily,
    x: int,
    case: str = SAME_SIGN,
    order: Order = AUTO,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    precision: int = DEFAULT_PRECISION,
) -> SeriesResult:
    """Whole series ``X(1) +- X(2) +- ...`` as head sum plus accelerated tail.

    For the alternating case the tail enters with the sign the full series
    gives to index ``x``, namely ``(-1)**(x+1)``.
    """
    alternating = case == ALTERNATING
    tail = tail_sum(term, x, case, order, max_order=max_order, precision=precision)
    head = head_sum(term, x, alternating)
    sign = (-1) ** (x + 1) if alternating else 1
    with decimal.localcontext() as ctx:
        ctx.prec = precision
        if isinstance(head, Fraction) and isinstance(tail.value, Decimal):
            head = Decimal(head.numerator) / Decimal(head.denominator)
        total = head + tail.value if sign > 0 else head - tail.value
    return SeriesResult(total, head, tail, x, sign)


def sum_series(term: TermFamily, x: int, case: str = SAME_SIGN, order: Order = AUTO, **kw) -> Scalar:
    return evaluate_series(term, x, case, order, **kw).total


def zeta_series(n: int, x: int = 10, order: Order = AUTO, **kw) -> SeriesResult:
    if n < 2:
        raise DivergenceError(f"zeta({n}) diverges: the exponent must be >= 2")
    return evaluate_series(PowerTerm(n), x, SAME_SIGN, order, **kw)


def eta_series(n: int, x: int = 10, order: Order = AUTO, **kw) -> SeriesResult:
    if n < 1:
        raise ValueError("eta requires n >= 1")
    return evaluate_series(PowerTerm(n), x, ALTERNATING, order, **kw)


def zeta_approx(n: int, x: int = 10, order: Order = AUTO, **kw) -> Fraction:
    """``sum 1/k**n`` for ``k >= 1``, as an exact rational approximation."""
    return zeta_series(n, x, order, **kw).total


def eta_approx(n: int, x: int = 10, order: Order = AUTO, **kw) -> Fraction:
    """``sum (-1)**(k+1) / k**n`` for ``k >= 1``; ``eta(1) = ln 2``."""
    return eta_series(n, x, order, **kw).total
