"""Meet and join for the symmetric order on finite sets, plus a brute-force oracle.

For ``A <=0 U`` to hold, ``U`` must arise from ``A`` by dropping a lower run of
its grades and adding grades above ``max(A)``. The join therefore keeps the
longest run of top grades shared by both sets below ``m = min(max A, max B)``
and everything either set has above ``m``. The meet is the mirror image.

The oracle enumerates every nonempty subset of a small universe with bitmasks
and never calls :func:`join0` or :func:`meet0`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import InternalError, OracleBudgetError
from .grades import THFE

__all__ = [
    "LatticeWitness",
    "MAX_ORACLE_UNIVERSE",
    "join0",
    "meet0",
    "oracle_is_greatest_lower_bound",
    "oracle_is_least_upper_bound",
]

MAX_ORACLE_UNIVERSE = 12


def join0(a: THFE, b: THFE) -> THFE:
    m = min(a.sup(), b.sup())
    low_a = [x for x in a.grades if x <= m]
    low_b = [x for x in b.grades if x <= m]
    shared: list[Fraction] = []
    while low_a and low_b and low_a[-1] == low_b[-1]:
        shared.append(low_a.pop())
        low_b.pop()
    above = {x for x in a.grades if x > m} | {x for x in b.grades if x > m}
    out = sorted(set(shared) | above)
    if not out:
        raise InternalError(f"join of {a} and {b} came out empty")
    return THFE(tuple(out))


def meet0(a: THFE, b: THFE) -> THFE:
    m = max(a.inf(), b.inf())
    high_a = [x for x in reversed(a.grades) if x >= m]
    high_b = [x for x in reversed(b.grades) if x >= m]
    shared: list[Fraction] = []
    while high_a and high_b and high_a[-1] == high_b[-1]:
        shared.append(high_a.pop())
        high_b.pop()
    below = {x for x in a.grades if x < m} | {x for x in b.grades if x < m}
    out = sorted(set(shared) | below)
    if not out:
        raise InternalError(f"meet of {a} and {b} came out empty")
    return THFE(tuple(out))


@dataclass(frozen=True)
class LatticeWitness:
    candidate: THFE
    checked_bounds: int
    verdict: bool


class _SubsetTable:
    """Nonempty subsets of a sorted universe, as bitmasks ``1..2**n - 1``."""

    def __init__(self, universe: tuple[Fraction, ...]):
        self.universe = universe
        self.index = {g: i for i, g in enumerate(universe)}
        n = len(universe)
        full = np.arange(1 << n, dtype=np.int64)
        # lowest and highest member index; sentinels make empty-set comparisons vacuous
        low = np.full(1 << n, n, dtype=np.int64)
        high = np.full(1 << n, -1, dtype=np.int64)
        for i in range(n - 1, -1, -1):
            low[(full >> i) & 1 == 1] = i
        for i in range(n):
            high[(full >> i) & 1 == 1] = i
        self.masks = full[1:]
        self.low = low
        self.high = high

    def mask(self, a: THFE) -> int:
        try:
            return sum(1 << self.index[g] for g in a.grades)
        except KeyError as exc:
            raise ValueError(f"{a} is not contained in the oracle universe") from exc

    def below(self, a: int, us: np.ndarray) -> np.ndarray:
        """Vector of ``a <=0 u`` over the masks ``us``."""
        return (self.high[a] < self.low[us & ~a]) & (self.high[a & ~us] < self.low[us])

    def above(self, a: int, us: np.ndarray) -> np.ndarray:
        """Vector of ``u <=0 a`` over the masks ``us``."""
        return (self.high[us] < self.low[a & ~us]) & (self.high[us & ~a] < self.low[a])


@lru_cache(maxsize=16)
def _table(universe: tuple[Fraction, ...]) -> _SubsetTable:
    return _SubsetTable(universe)


def _prepare(universe: Sequence[object], *sets: THFE) -> tuple[_SubsetTable, list[int]]:
    grid = tuple(THFE.of(*universe).grades) if universe else ()
    if len(grid) > MAX_ORACLE_UNIVERSE:
        raise OracleBudgetError(f"universe of {len(grid)} points exceeds the limit of {MAX_ORACLE_UNIVERSE}")
    table = _table(grid)
    return table, [table.mask(s) for s in sets]


def oracle_is_least_upper_bound(a: THFE, b: THFE, c: THFE, universe: Sequence[object]) -> LatticeWitness:
    """Check by enumeration that ``c`` is the least upper bound of ``a`` and ``b``.

    Upper bounds are taken among all nonempty subsets of ``universe``.
    """
    table, (ma, mb, mc) = _prepare(universe, a, b, c)
    us = table.masks
    bounds = us[table.below(ma, us) & table.below(mb, us)]
    is_bound = bool(table.below(ma, np.array([mc]))[0] and table.below(mb, np.array([mc]))[0])
    least = bool(table.below(mc, bounds).all())
    return LatticeWitness(c, int(bounds.size), is_bound and least)


def oracle_is_greatest_lower_bound(a: THFE, b: THFE, c: THFE, universe: Sequence[object]) -> LatticeWitness:
    table, (ma, mb, mc) = _prepare(universe, a, b, c)
    us = table.masks
    bounds = us[table.above(ma, us) & table.above(mb, us)]
    is_bound = bool(table.above(ma, np.array([mc]))[0] and table.above(mb, np.array([mc]))[0])
    greatest = bool(table.above(mc, bounds).all())
    return LatticeWitness(c, int(bounds.size), is_bound and greatest)
