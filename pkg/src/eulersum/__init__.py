"""Euler's differential summation formulas.

Same-sign tails ``X(x) + X(x+1) + ...`` and alternating tails
``X(x) - X(x+1) + ...`` are replaced by an integral (same-sign only), half
the first term and a short series in the odd derivatives of ``X``, whose
weights are exact rationals generated from the expansions of ``coth`` and
``tanh``.

>>> from eulersum import zeta_approx, rat_to_decimal
>>> rat_to_decimal(zeta_approx(2, 10, 5), 12)
'1.644934066848'
"""

from .coefficients import (
    COTH,
    TANH,
    CoefficientTable,
    EngineWeights,
    coth_coefficients,
    engine_weights,
    ratio_identity_check,
    tanh_coefficients,
    zeta_relation,
)
from .engine import (
    ALTERNATING,
    AUTO,
    SAME_SIGN,
    SeriesResult,
    TailSumRequest,
    TailSumResult,
    eta_approx,
    evaluate_series,
    sum_series,
    tail_sum,
    zeta_approx,
)
from .errors import DivergenceError, DomainError, PoleError, SeriesDivisionError
from .exact import Rational, rat_add, rat_div, rat_mul, rat_sub, rat_to_decimal
from .series import PowerSeries, ps_add, ps_div, ps_exp_z, ps_mul, ps_ratio_even_odd
from .terms import FunctionTerm, PowerTerm, TermFamily, head_sum

__version__ = "0.1.0"
