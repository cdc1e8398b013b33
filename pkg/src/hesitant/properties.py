"""Normative properties of scores: [SMU], [WMU], [G], [WG] and [EM].

Checkers take opaque score callables. Set scores map :class:`THFE` to a
number, interval scores map a closed interval ``(a, b)`` to a number.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Optional, Sequence

from .errors import OracleBudgetError, SampleError
from .grades import THFE, IntervalUnionHFE, Piece, grade, strictly_below
from .orders import leq_symmetric
from .scores import ScoreFn, ScoreKind, score_function

__all__ = [
    "EquivalenceReport",
    "MAX_FAMILY_GRID",
    "PropertyKind",
    "PropertyReport",
    "check_em",
    "check_gardenfors",
    "check_interval_monotone",
    "check_monotone",
    "check_smu",
    "check_wmu",
    "closed_family_equivalence_suite",
    "closed_interval",
    "grid_family",
    "disjoint_strict_orders_agree",
    "parse_grid",
]

MAX_FAMILY_GRID = 10

IntervalScore = Callable[[Fraction, Fraction], Any]


class PropertyKind(enum.Enum):
    SMU = "smu"
    WMU = "wmu"
    G = "g"
    WG = "wg"
    EM = "em"


@dataclass(frozen=True)
class PropertyReport:
    property: PropertyKind
    holds_on_sample: bool
    counterexample: Optional[tuple] = None


def _report(kind: PropertyKind, bad: Optional[tuple]) -> PropertyReport:
    return PropertyReport(kind, bad is None, bad)


def _union(x: THFE, y: THFE) -> THFE:
    return THFE(tuple(sorted(x.as_set() | y.as_set())))


def _check_unions(s: ScoreFn, sample: Iterable[tuple[THFE, THFE]], strict: bool) -> Optional[tuple]:
    for x, y in sample:
        if not strictly_below(x, y):
            raise SampleError(f"{x} is not strictly below {y}")
        sx, sxy, sy = s(x), s(_union(x, y)), s(y)
        ok = sx < sxy < sy if strict else sx <= sxy <= sy
        if not ok:
            return (x, y)
    return None


def check_smu(s, sample: Iterable[tuple[THFE, THFE]]) -> PropertyReport:
    return _report(PropertyKind.SMU, _check_unions(score_function(s), sample, strict=True))


def check_wmu(s, sample: Iterable[tuple[THFE, THFE]]) -> PropertyReport:
    return _report(PropertyKind.WMU, _check_unions(score_function(s), sample, strict=False))


def check_gardenfors(s, sample: Iterable[tuple[THFE, object]], strict: bool = True) -> PropertyReport:
    """Adding a grade below the minimum must lower the score, above the maximum raise it.

    ``strict=False`` gives the weak variant, where the score may stay put.
    """
    s = score_function(s)
    kind = PropertyKind.G if strict else PropertyKind.WG
    for a, x in sample:
        x = grade(x)
        if x in a:
            raise SampleError(f"{x} already belongs to {a}")
        if not (x < a.inf() or x > a.sup()):
            continue
        sa, sax = s(a), s(THFE(tuple(sorted(a.grades + (x,)))))
        lo, hi = (sax, sa) if x < a.inf() else (sa, sax)
        if not (lo < hi if strict else lo <= hi):
            return _report(kind, (a, x))
    return _report(kind, None)


def closed_interval(a: object, b: object) -> IntervalUnionHFE:
    return IntervalUnionHFE.from_pieces([Piece.interval(a, b)])


def check_em(s: IntervalScore, sample: Iterable[tuple[tuple, tuple]]) -> PropertyReport:
    """Extremes monotonicity on pairs ``((a, b), (a2, b2))`` of closed intervals.

    Each pair must either share the left end with ``b < b2`` or share the
    right end with ``a < a2``; the right interval must then score strictly
    higher.
    """
    for (a, b), (a2, b2) in sample:
        a, b, a2, b2 = grade(a), grade(b), grade(a2), grade(b2)
        if a > b or a2 > b2:
            raise SampleError(f"[{a}, {b}] or [{a2}, {b2}] is not an interval")
        if not ((a == a2 and b < b2) or (b == b2 and a < a2)):
            raise SampleError(f"[{a}, {b}] and [{a2}, {b2}] do not share an endpoint in an [EM] configuration")
        if not s(a, b) < s(a2, b2):
            return _report(PropertyKind.EM, ((a, b), (a2, b2)))
    return _report(PropertyKind.EM, None)


def check_interval_monotone(
    s: IntervalScore, sample: Iterable[tuple[tuple, tuple]], strict: bool = False
) -> Optional[tuple]:
    """First pair of closed intervals breaking (strict) symmetric-order monotonicity, else None.

    Comparability is decided with :func:`leq_symmetric` on the interval sets.
    """
    for (a, b), (c, d) in sample:
        x, y = closed_interval(a, b), closed_interval(c, d)
        for (p, u), (q, v) in (((x, (a, b)), (y, (c, d))), ((y, (c, d)), (x, (a, b)))):
            if not leq_symmetric(p, q):
                continue
            su, sv = s(*map(grade, u)), s(*map(grade, v))
            if su > sv or (strict and p != q and not su < sv):
                return (u, v)
    return None


def check_monotone(s, family: Sequence[THFE], strict: bool = False) -> Optional[tuple]:
    """First pair ``A <=0 B`` in ``family`` with ``s(A) > s(B)`` (or not ``<`` when strict)."""
    s = score_function(s)
    values = [s(a) for a in family]
    for i, a in enumerate(family):
        for j, b in enumerate(family):
            if i == j or not leq_symmetric(a, b):
                continue
            if values[i] > values[j] or (strict and not values[i] < values[j]):
                return (a, b)
    return None


def parse_grid(text: str) -> list[Fraction]:
    """Parse ``"start:stop:step"`` (inclusive) or a comma-separated list of grades."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise SampleError(f"grid {text!r} must look like start:stop:step")
        start, stop, step = (Fraction(p) for p in parts)
        if step <= 0:
            raise SampleError("grid step must be positive")
        out, x = [], start
        while x <= stop:
            out.append(grade(x))
            x += step
        return out
    return [grade(p) for p in text.split(",") if p.strip()]


def grid_family(grid: Sequence[object]) -> list[THFE]:
    """All nonempty subsets of ``grid``."""
    points = sorted({grade(g) for g in grid})
    if len(points) > MAX_FAMILY_GRID:
        raise OracleBudgetError(f"grid of {len(points)} points exceeds the limit of {MAX_FAMILY_GRID}")
    return [THFE(c) for r in range(1, len(points) + 1) for c in combinations(points, r)]


@dataclass(frozen=True)
class EquivalenceReport:
    """Verdicts of every property on a full closed family.

    ``consistent`` is true when the weak trio agree with each other and the
    strong trio agree with each other.
    """

    wmu: PropertyReport
    smu: PropertyReport
    wg: PropertyReport
    g: PropertyReport
    monotone: bool
    strictly_monotone: bool

    @property
    def weak_verdicts(self) -> tuple[bool, bool, bool]:
        return (self.wmu.holds_on_sample, self.monotone, self.wg.holds_on_sample)

    @property
    def strong_verdicts(self) -> tuple[bool, bool, bool]:
        return (self.smu.holds_on_sample, self.strictly_monotone, self.g.holds_on_sample)

    @property
    def consistent(self) -> bool:
        return len(set(self.weak_verdicts)) == 1 and len(set(self.strong_verdicts)) == 1


def closed_family_equivalence_suite(s, grid: Sequence[object]) -> EquivalenceReport:
    """Evaluate every union/Gardenfors property and symmetric monotonicity on all subsets of ``grid``."""
    s = score_function(s)
    family = grid_family(grid)
    points = sorted({grade(g) for g in grid})
    separated = [(x, y) for x in family for y in family if strictly_below(x, y)]
    extensions = [(a, x) for a in family for x in points if x not in a]
    return EquivalenceReport(
        wmu=check_wmu(s, separated),
        smu=check_smu(s, separated),
        wg=check_gardenfors(s, extensions, strict=False),
        g=check_gardenfors(s, extensions, strict=True),
        monotone=check_monotone(s, family) is None,
        strictly_monotone=check_monotone(s, family, strict=True) is None,
    )


def disjoint_strict_orders_agree(x: THFE, y: THFE) -> bool:
    """For disjoint ``x`` and ``y``: the four strict-order statements agree.

    They are ``x < y`` elementwise, ``x <0 y``, ``x <0 x|y`` and ``x|y <0 y``.
    """
    if x.as_set() & y.as_set():
        raise SampleError(f"{x} and {y} are not disjoint")

    def lt0(p: THFE, q: THFE) -> bool:
        return p != q and leq_symmetric(p, q)

    xy = _union(x, y)
    verdicts = {strictly_below(x, y), lt0(x, y), lt0(x, xy), lt0(xy, y)}
    return len(verdicts) == 1


def _constant_half(_: THFE) -> Fraction:
    return Fraction(1, 2)


NAMED_SCORES: dict[str, ScoreFn] = {k.value: score_function(k) for k in ScoreKind}
NAMED_SCORES["const"] = _constant_half
