"""Score functions on typical hesitant fuzzy elements and order-relative score checks.

Mean, min, max and product are exact rationals. The geometric mean is an
n-th root and is returned as a float; comparisons involving it use
:data:`GMEAN_TOLERANCE`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .grades import THFE
from .orders import OrderKind, leq

__all__ = [
    "GMEAN_TOLERANCE",
    "ScoreKind",
    "ScoreReport",
    "check_boundedness",
    "check_compatibility",
    "check_score_wrt",
    "score",
    "score_function",
]

GMEAN_TOLERANCE = 1e-12

Number = Union[Fraction, float]
ScoreFn = Callable[[THFE], Number]


class ScoreKind(enum.Enum):
    MEAN = "mean"
    GMEAN = "gmean"
    MIN = "min"
    MAX = "max"
    PRODUCT = "product"


def _gmean(a: THFE) -> float:
    if a.grades[0] == 0:
        return 0.0
    return math.exp(math.fsum(math.log(g) for g in a.grades) / len(a))


_SCORES: dict[ScoreKind, ScoreFn] = {
    ScoreKind.MEAN: lambda a: sum(a.grades, Fraction(0)) / len(a),
    ScoreKind.GMEAN: _gmean,
    ScoreKind.MIN: lambda a: a.grades[0],
    ScoreKind.MAX: lambda a: a.grades[-1],
    ScoreKind.PRODUCT: lambda a: math.prod(a.grades, start=Fraction(1)),
}


def score(kind: ScoreKind, a: THFE) -> Number:
    return _SCORES[kind](a)


def score_function(kind: Union[ScoreKind, ScoreFn]) -> ScoreFn:
    """Resolve a built-in kind to its callable; callables pass through unchanged."""
    if isinstance(kind, ScoreKind):
        return _SCORES[kind]
    return kind


def _tolerance(kind: Union[ScoreKind, ScoreFn]) -> Number:
    # an exact zero keeps rational comparisons exact; a float 0.0 would not
    return GMEAN_TOLERANCE if kind is ScoreKind.GMEAN else Fraction(0)


@dataclass(frozen=True)
class ScoreReport:
    """Outcome of a sampled score check.

    ``is_score`` only means that no counterexample was found in the sample.
    ``counterexample`` is the first pair that broke monotonicity, or failing
    that the first comparable distinct pair whose scores were not strictly
    ordered.
    """

    order: OrderKind
    is_score: bool
    is_strong: bool
    counterexample: Optional[tuple[THFE, THFE]] = None


def check_score_wrt(
    kind: Union[ScoreKind, ScoreFn],
    order: OrderKind,
    sample: Iterable[tuple[THFE, THFE]],
    tol: Optional[float] = None,
) -> ScoreReport:
    """Test monotonicity of a score on every comparable pair of ``sample``.

    Each pair is examined in both directions.
    """
    s = score_function(kind)
    tol = _tolerance(kind) if tol is None else (tol or Fraction(0))
    weak_bad = strict_bad = None
    for a, b in sample:
        for x, y in ((a, b), (b, a)):
            if not leq(order, x, y):
                continue
            sx, sy = s(x), s(y)
            if weak_bad is None and sx > sy + tol:
                weak_bad = (x, y)
            if strict_bad is None and x != y and not sx < sy:
                strict_bad = (x, y)
        if weak_bad is not None:
            break
    return ScoreReport(
        order=order,
        is_score=weak_bad is None,
        is_strong=weak_bad is None and strict_bad is None,
        counterexample=weak_bad or strict_bad,
    )


def check_boundedness(kind: Union[ScoreKind, ScoreFn], sample: Iterable[THFE]) -> bool:
    """Whether ``min(E) <= s(E) <= max(E)`` for every ``E`` in the sample."""
    s = score_function(kind)
    tol = _tolerance(kind)
    return all(e.inf() - tol <= s(e) <= e.sup() + tol for e in sample)


def check_compatibility(kind: Union[ScoreKind, ScoreFn], grades: Iterable[object]) -> bool:
    """Whether ``s({a}) == a`` for every sampled grade."""
    s = score_function(kind)
    tol = _tolerance(kind)
    for g in grades:
        single = THFE.of(g)
        if abs(s(single) - single.grades[0]) > tol:
            return False
    return True
