"""Exact coefficient families for the two summation formulas.

Two families of positive rationals drive everything:

* COTH, ``a_1, a_2, ... = 1/6, 1/90, 1/945, ...``. Writing
  ``u = 1/t + 2 a_1 t - 2 a_2 t**3 + 2 a_3 t**5 - ...`` for ``coth(t)`` and
  matching powers in ``u' + u**2 - 1 = 0`` gives
  ``(4k + 2) a_k = 4 * sum(a_i * a_j for i + j == k)`` for ``k >= 2``.
  These are also ``zeta(2k) / pi**(2k)``.
* TANH, ``c_0, c_1, ... = 1, 1/3, 2/15, 17/315, ...`` with
  ``tanh(t) = t - c_1 t**3 + c_2 t**5 - ...``; the same ODE gives
  ``(2k + 1) c_k = sum(c_i * c_j for i + j == k - 1)``.

From them come the per-derivative weights of the tail formulas::

    same sign:    S = int_x^inf X + X/2 + sum_k e_k * X^(2k-1)(x)
    alternating:  S = X/2 + sum_k f_k * X^(2k-1)(x)

with ``e_k = (-1)**k a_k / 2**(2k-1)`` and ``f_k = (-1)**k c_{k-1} / 4**k``.
The two are tied by ``f_k = (2**(2k) - 1) e_k``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

__all__ = [
    "COTH",
    "TANH",
    "CoefficientTable",
    "EngineWeights",
    "coth_coefficients",
    "tanh_coefficients",
    "engine_weights",
    "ratio_identity_check",
    "zeta_relation",
    "shared_table",
]

COTH = "COTH"
TANH = "TANH"

_FIRST_INDEX = {COTH: 1, TANH: 0}


def _next_coth(values: list[Fraction]) -> Fraction:
    k = len(values) + 1
    if k == 1:
        return Fraction(1, 6)
    # values[i - 1] holds a_i
    conv = sum(values[i - 1] * values[k - i - 1] for i in range(1, k))
    return Fraction(4, 4 * k + 2) * conv


def _next_tanh(values: list[Fraction]) -> Fraction:
    k = len(values)
    if k == 0:
        return Fraction(1)
    conv = sum(values[i] * values[k - 1 - i] for i in range(k))
    return conv / (2 * k + 1)


_NEXT = {COTH: _next_coth, TANH: _next_tanh}


class CoefficientTable:
    """Append-only exact table for one family.

    Indexing follows the family's natural numbering: ``table[1]`` is ``a_1``
    for COTH and ``table[0]`` is ``c_0`` for TANH. Extending the table never
    touches existing entries; extension holds a lock so a shared table can be
    read from several threads while one of them grows it.
    """

    def __init__(self, family: str, values=()):
        if family not in _NEXT:
            raise ValueError(f"unknown coefficient family {family!r}")
        self.family = family
        self._values: list[Fraction] = [Fraction(v) for v in values]
        self._lock = threading.Lock()

    @property
    def first_index(self) -> int:
        return _FIRST_INDEX[self.family]

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(tuple(self._values))

    def __getitem__(self, k: int) -> Fraction:
        pos = k - self.first_index
        if pos < 0:
            raise IndexError(f"{self.family} coefficients start at index {self.first_index}")
        if pos >= len(self._values):
            self.extend_to(pos + 1)
        return self._values[pos]

    def indices(self) -> range:
        return range(self.first_index, self.first_index + len(self._values))

    def extend_to(self, count: int) -> "CoefficientTable":
        """Grow the table in place until it holds at least ``count`` entries."""
        if len(self._values) >= count:
            return self
        step = _NEXT[self.family]
        with self._lock:
            while len(self._values) < count:
                self._values.append(step(self._values))
        return self

    def head(self, count: int) -> "CoefficientTable":
        """A new table holding exactly the first ``count`` entries."""
        self.extend_to(count)
        return CoefficientTable(self.family, self._values[:count])

    def __repr__(self) -> str:
        return f"CoefficientTable({self.family}, {len(self._values)} entries)"


_SHARED = {COTH: CoefficientTable(COTH), TANH: CoefficientTable(TANH)}


def shared_table(family: str) -> CoefficientTable:
    """The process-wide cache for ``family``."""
    return _SHARED[family]


def coth_coefficients(count: int) -> CoefficientTable:
    """``a_1 .. a_count``: 1/6, 1/90, 1/945, 1/9450, 1/93555, ..."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return _SHARED[COTH].head(count)


def tanh_coefficients(count: int) -> CoefficientTable:
    """``c_0 .. c_{count-1}``: 1, 1/3, 2/15, 17/315, 62/2835, ..."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return _SHARED[TANH].head(count)


@dataclass(frozen=True)
class EngineWeights:
    """Weights of ``X^(2k-1)`` in the same-sign (``case1``) and alternating
    (``case2``) tail formulas, for ``k = 1 .. max_order`` (list index k-1)."""

    case1: tuple[Fraction, ...]
    case2: tuple[Fraction, ...]

    @property
    def max_order(self) -> int:
        return len(self.case1)

    def e(self, k: int) -> Fraction:
        return self.case1[k - 1]

    def f(self, k: int) -> Fraction:
        return self.case2[k - 1]


def engine_weights(max_order: int) -> EngineWeights:
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    coth = _SHARED[COTH].extend_to(max_order)
    tanh = _SHARED[TANH].extend_to(max_order)
    case1 = tuple((-1) ** k * coth[k] / 2 ** (2 * k - 1) for k in range(1, max_order + 1))
    case2 = tuple((-1) ** k * tanh[k - 1] / 4**k for k in range(1, max_order + 1))
    return EngineWeights(case1, case2)


def ratio_identity_check(k: int) -> Fraction:
    """``f_k / e_k``; equals ``2**(2k) - 1`` exactly."""
    if k < 1:
        raise ValueError("k must be >= 1")
    w = engine_weights(k)
    return w.f(k) / w.e(k)


def zeta_relation(k: int) -> Fraction:
    """``a_k``, the rational with ``zeta(2k) = a_k * pi**(2k)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _SHARED[COTH][k]
