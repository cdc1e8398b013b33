"""Partial orders on hesitant fuzzy elements.

Cardinality-based orders (list, pessimistic, optimistic) work on :class:`THFE`
only. The set-based orders (right, left, symmetric) also accept
:class:`IntervalUnionHFE` operands.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ArityError, WitnessError
from .grades import (
    HFE,
    THFE,
    IntervalUnionHFE,
    as_intervals,
    set_difference,
    set_intersection,
    strictly_below,
)

__all__ = [
    "LEQ",
    "OrderKind",
    "OrderVerdict",
    "compare",
    "next_pessimistic_lower_bound",
    "leq",
    "leq_left",
    "leq_list",
    "leq_opt",
    "leq_pes",
    "leq_prod",
    "leq_right",
    "leq_symmetric",
    "leq_symmetric_via_partition",
    "optimistic_extension",
    "pessimistic_extension",
    "verdict",
]


class OrderKind(enum.Enum):
    PRODUCT = "prod"
    LIST = "list"
    PESSIMISTIC = "pes"
    OPTIMISTIC = "opt"
    RIGHT = "right"
    LEFT = "left"
    SYMMETRIC = "sym"


@dataclass(frozen=True)
class OrderVerdict:
    leq: bool
    strict: bool


def leq_prod(x: Sequence[Fraction], y: Sequence[Fraction]) -> bool:
    if len(x) != len(y):
        raise ArityError(f"product order needs equal lengths, got {len(x)} and {len(y)}")
    return all(a <= b for a, b in zip(x, y))


def pessimistic_extension(a: THFE, n: int) -> tuple[Fraction, ...]:
    """Left-pad the sorted grades of ``a`` with its minimum up to length ``n``."""
    if n < len(a):
        raise ArityError(f"cannot extend a set of {len(a)} grades to length {n}")
    return (a.grades[0],) * (n - len(a)) + a.grades


def optimistic_extension(a: THFE, n: int) -> tuple[Fraction, ...]:
    """Right-pad the sorted grades of ``a`` with its maximum up to length ``n``."""
    if n < len(a):
        raise ArityError(f"cannot extend a set of {len(a)} grades to length {n}")
    return a.grades + (a.grades[-1],) * (n - len(a))


_ZERO = (Fraction(0),)
_ONE = (Fraction(1),)


def leq_list(a: THFE, b: THFE) -> bool:
    if a.grades == _ZERO or b.grades == _ONE:
        return True
    return len(a) == len(b) and leq_prod(a.grades, b.grades)


def leq_pes(a: THFE, b: THFE) -> bool:
    n = max(len(a), len(b))
    return leq_prod(pessimistic_extension(a, n), pessimistic_extension(b, n))


def leq_opt(a: THFE, b: THFE) -> bool:
    n = max(len(a), len(b))
    return leq_prod(optimistic_extension(a, n), optimistic_extension(b, n))


def _finite_pair(a: HFE, b: HFE) -> bool:
    return isinstance(a, THFE) and isinstance(b, THFE)


def leq_right(a: HFE, b: HFE) -> bool:
    """``a`` sup is at most ``b`` sup and ``a`` lies strictly below ``b \\ a``."""
    if _finite_pair(a, b):
        if a.sup() > b.sup():
            return False
        added = b.as_set() - a.as_set()
        return not added or a.sup() < min(added)
    a_i, b_i = as_intervals(a), as_intervals(b)
    return a_i.sup().value <= b_i.sup().value and strictly_below(a_i, set_difference(b_i, a_i))


def leq_left(a: HFE, b: HFE) -> bool:
    """``a`` inf is at most ``b`` inf and ``a \\ b`` lies strictly below ``b``."""
    if _finite_pair(a, b):
        if a.inf() > b.inf():
            return False
        removed = a.as_set() - b.as_set()
        return not removed or max(removed) < b.inf()
    a_i, b_i = as_intervals(a), as_intervals(b)
    return a_i.inf().value <= b_i.inf().value and strictly_below(set_difference(a_i, b_i), b_i)


def leq_symmetric(a: HFE, b: HFE) -> bool:
    """The symmetric order: ``a < b \\ a`` and ``a \\ b < b``."""
    if _finite_pair(a, b):
        sa, sb = a.as_set(), b.as_set()
        added, removed = sb - sa, sa - sb
        return (not added or a.sup() < min(added)) and (not removed or max(removed) < b.inf())
    a_i, b_i = as_intervals(a), as_intervals(b)
    return strictly_below(a_i, set_difference(b_i, a_i)) and strictly_below(set_difference(a_i, b_i), b_i)


def leq_symmetric_via_partition(a: HFE, b: HFE) -> bool:
    """Same relation as :func:`leq_symmetric`, decided from the three-way split of ``a`` and ``b``.

    Disjoint operands must satisfy ``a < b``. Otherwise the parts must be
    ordered ``a \\ b < a & b < b \\ a``.
    """
    common = set_intersection(a, b)
    if not common:
        return strictly_below(a, b)
    return strictly_below(set_difference(a, b), common) and strictly_below(common, set_difference(b, a))


LEQ: dict[OrderKind, Callable[[HFE, HFE], bool]] = {
    OrderKind.LIST: leq_list,
    OrderKind.PESSIMISTIC: leq_pes,
    OrderKind.OPTIMISTIC: leq_opt,
    OrderKind.RIGHT: leq_right,
    OrderKind.LEFT: leq_left,
    OrderKind.SYMMETRIC: leq_symmetric,
}

_FINITE_ONLY = {OrderKind.LIST, OrderKind.PESSIMISTIC, OrderKind.OPTIMISTIC}


def _canonical(x: HFE) -> HFE:
    if isinstance(x, IntervalUnionHFE) and x.is_finite:
        return x.to_thfe()
    return x


def leq(order: OrderKind, a, b) -> bool:
    if order is OrderKind.PRODUCT:
        return leq_prod(a, b)
    a, b = _canonical(a), _canonical(b)
    if order in _FINITE_ONLY and not _finite_pair(a, b):
        raise TypeError(f"the {order.value} order is only defined on finite sets")
    return LEQ[order](a, b)


def verdict(order: OrderKind, a, b) -> OrderVerdict:
    holds = leq(order, a, b)
    if order is OrderKind.PRODUCT:
        return OrderVerdict(holds, holds and tuple(a) != tuple(b))
    return OrderVerdict(holds, holds and _canonical(a) != _canonical(b))


def compare(order: OrderKind, a, b) -> str:
    """One of ``"equal"``, ``"leq"``, ``"geq"`` or ``"incomparable"``."""
    forward, backward = leq(order, a, b), leq(order, b, a)
    if forward and backward:
        return "equal"
    if forward:
        return "leq"
    if backward:
        return "geq"
    return "incomparable"


WITNESS_A = THFE.of("0.1", "0.4", "0.5", "0.7")
WITNESS_B = THFE.of("0.3", "0.6")


def next_pessimistic_lower_bound(x: THFE) -> THFE:
    """Return a common pessimistic lower bound of the witness pair strictly above ``x``.

    ``x`` must itself be a common lower bound of ``{0.1, 0.4, 0.5, 0.7}`` and
    ``{0.3, 0.6}`` with at least four grades. The third-largest grade is moved
    to the midpoint between it and the second-largest, so the cardinality is
    kept and the sequence never reaches a greatest lower bound.
    """
    if len(x) < 4:
        raise WitnessError(f"{x} has fewer than four grades")
    if not (leq_pes(x, WITNESS_A) and leq_pes(x, WITNESS_B)):
        raise WitnessError(f"{x} is not a common pessimistic lower bound of {WITNESS_A} and {WITNESS_B}")
    g = list(x.grades)
    g[-3] = (g[-3] + g[-2]) / 2
    return THFE(tuple(g))
