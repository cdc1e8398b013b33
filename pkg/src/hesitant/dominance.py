"""Dominance functions: discrete (step kernel) and relative (affine kernel).

``dominance(kind, x, y)`` measures how far ``y`` exceeds the control set
``x``. All values are exact rationals.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Union

from .grades import THFE
from .orders import OrderKind, leq

__all__ = [
    "ContractReport",
    "DominanceKind",
    "KernelMatrix",
    "check_dominance_contract",
    "dominance",
    "dominance_function",
    "kernel_matrix",
    "kernel_r",
    "kernel_s",
]

HALF = Fraction(1, 2)


class DominanceKind(enum.Enum):
    DDF = "ddf"
    RDF = "rdf"


def kernel_s(x: Fraction, y: Fraction) -> Fraction:
    if x < y:
        return Fraction(1)
    if x == y:
        return HALF
    return Fraction(0)


def kernel_r(x: Fraction, y: Fraction) -> Fraction:
    return (y - x + 1) / 2


_KERNELS = {DominanceKind.DDF: kernel_s, DominanceKind.RDF: kernel_r}


def dominance(kind: DominanceKind, x: THFE, y: THFE) -> Fraction:
    """Mean of the kernel over all pairs, with ``x`` as the control set.

    The pair sums are collapsed exactly: the affine kernel averages to
    ``(mean(y) - mean(x) + 1) / 2`` and the step kernel only needs, for each
    control grade, how many grades of ``y`` lie above it or equal it.
    """
    if kind is DominanceKind.RDF:
        return (sum(y.grades, Fraction(0)) / len(y) - sum(x.grades, Fraction(0)) / len(x) + 1) / 2
    ys = y.grades
    twice = 0
    for a in x.grades:
        lo, hi = bisect_left(ys, a), bisect_right(ys, a)
        twice += 2 * (len(ys) - hi) + (hi - lo)
    return Fraction(twice, 2 * len(x) * len(ys))


def dominance_function(kind: DominanceKind) -> Callable[[THFE, THFE], Fraction]:
    return lambda x, y: dominance(kind, x, y)


@dataclass(frozen=True)
class KernelMatrix:
    """Pairwise kernel table; rows follow the sorted first set, columns the sorted second."""

    kind: DominanceKind
    row_grades: tuple[Fraction, ...]
    col_grades: tuple[Fraction, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_grades), len(self.col_grades)

    def mean(self) -> Fraction:
        rows, cols = self.shape
        return sum((v for row in self.entries for v in row), Fraction(0)) / (rows * cols)


def kernel_matrix(kind: DominanceKind, a: THFE, b: THFE) -> KernelMatrix:
    k = _KERNELS[kind]
    entries = tuple(tuple(k(x, y) for y in b.grades) for x in a.grades)
    return KernelMatrix(kind, a.grades, b.grades, entries)


@dataclass(frozen=True)
class ContractReport:
    order: OrderKind
    holds_on_sample: bool
    counterexample: Optional[tuple] = None


def check_dominance_contract(
    d: Union[DominanceKind, Callable[[THFE, THFE], object]],
    order: OrderKind,
    sample: Iterable[tuple[THFE, THFE, THFE]],
) -> ContractReport:
    """Check ``d(x, x) == 1/2`` and ``y <= z  =>  d(x, y) <= d(x, z)`` on each triple.

    Triples whose ``y`` and ``z`` are incomparable only contribute the
    diagonal checks. Reciprocity is deliberately not required.
    """
    if isinstance(d, DominanceKind):
        d = dominance_function(d)
    for x, y, z in sample:
        for s in (x, y, z):
            if d(s, s) != HALF:
                return ContractReport(order, False, (s, s))
        if leq(order, y, z) and not d(x, y) <= d(x, z):
            return ContractReport(order, False, (x, y, z))
        if leq(order, z, y) and not d(x, z) <= d(x, y):
            return ContractReport(order, False, (x, z, y))
    return ContractReport(order, True, None)
