"""Exact membership grades, typical hesitant fuzzy elements and interval unions.

Grades are :class:`fractions.Fraction` values in [0, 1]. Decimal literals are
parsed from their text so that ``"0.1"`` is exactly ``1/10``.

Two element types are provided:

* :class:`THFE` -- a finite nonempty set of grades, stored as a strictly
  increasing tuple.
* :class:`IntervalUnionHFE` -- a finite union of disjoint points and
  intervals with open/closed endpoints, e.g. ``{0.2} u [0.3, 0.6)``.

Set differences and intersections can be empty, in which case the
:data:`EMPTY` sentinel is returned instead of an element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, NamedTuple, Union

from .errors import EmptyHFE, RangeError

__all__ = [
    "EMPTY",
    "Bound",
    "EmptySet",
    "Grade",
    "IntervalUnionHFE",
    "Piece",
    "THFE",
    "as_intervals",
    "complement",
    "grade",
    "normalize",
    "set_difference",
    "set_intersection",
    "set_union",
    "strictly_below",
]

Grade = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def grade(value: object) -> Fraction:
    """Convert ``value`` to an exact grade in [0, 1].

    Strings and :class:`~decimal.Decimal` are read exactly. Floats are read
    through their shortest decimal repr, so ``0.1`` becomes ``1/10`` rather
    than the nearest binary fraction.
    """
    if isinstance(value, bool):
        raise RangeError(f"not a grade: {value!r}")
    if isinstance(value, Fraction):
        g = value
    elif isinstance(value, (int, Rational)):
        g = Fraction(value)
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise RangeError(f"not a finite grade: {value!r}")
        g = Fraction(repr(value))
    elif isinstance(value, Decimal):
        if not value.is_finite():
            raise RangeError(f"not a finite grade: {value!r}")
        g = Fraction(value)
    elif isinstance(value, str):
        try:
            g = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise RangeError(f"not a grade: {value!r}") from exc
    else:
        raise RangeError(f"not a grade: {value!r}")
    if not _ZERO <= g <= _ONE:
        raise RangeError(f"grade {value} is outside [0, 1]")
    return g


@dataclass(frozen=True)
class THFE:
    """Typical hesitant fuzzy element: a finite nonempty subset of [0, 1].

    ``grades`` is the canonical strictly increasing tuple. Use :func:`normalize`
    or :meth:`of` to build one from arbitrary input.
    """

    grades: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.grades:
            raise EmptyHFE("a hesitant fuzzy element must be nonempty")
        prev = None
        for g in self.grades:
            if not isinstance(g, Fraction) or not _ZERO <= g <= _ONE:
                raise RangeError(f"invalid grade {g!r}")
            if prev is not None and not prev < g:
                raise ValueError("grades must be strictly increasing; use normalize()")
            prev = g

    @classmethod
    def of(cls, *values: object) -> "THFE":
        return normalize(values)

    def __len__(self) -> int:
        return len(self.grades)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.grades)

    def __contains__(self, x: object) -> bool:
        return x in self.grades

    def cardinality(self) -> int:
        return len(self.grades)

    def inf(self) -> Fraction:
        return self.grades[0]

    def sup(self) -> Fraction:
        return self.grades[-1]

    def as_set(self) -> frozenset[Fraction]:
        return frozenset(self.grades)

    def complement(self) -> "THFE":
        return THFE(tuple(_ONE - g for g in reversed(self.grades)))

    def __str__(self) -> str:
        return "{" + ", ".join(_fmt(g) for g in self.grades) + "}"


def normalize(raw: Iterable[object]) -> THFE:
    """Sort and deduplicate ``raw`` into a :class:`THFE`."""
    values = {grade(v) for v in raw}
    if not values:
        raise EmptyHFE("a hesitant fuzzy element must be nonempty")
    return THFE(tuple(sorted(values)))


def _from_set(values: Iterable[Fraction]) -> "THFE | EmptySet":
    values = sorted(set(values))
    return THFE(tuple(values)) if values else EMPTY


def _fmt(g: Fraction) -> str:
    if g.denominator == 1:
        return str(g.numerator)
    d = Decimal(g.numerator) / Decimal(g.denominator)
    # exact decimals print as such, others fall back to the fraction
    if Fraction(d) == g:
        return format(d.normalize(), "f")
    return f"{g.numerator}/{g.denominator}"


class EmptySet:
    """The empty subset of [0, 1]. Never a hesitant fuzzy element itself."""

    _instance: "EmptySet | None" = None

    def __new__(cls) -> "EmptySet":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __len__(self) -> int:
        return 0

    def __iter__(self) -> Iterator[Fraction]:
        return iter(())

    def __repr__(self) -> str:
        return "EMPTY"

    __str__ = __repr__

    def __reduce__(self):
        return (EmptySet, ())


EMPTY = EmptySet()


@dataclass(frozen=True, order=True)
class Piece:
    """A point ``{lo}`` (``lo == hi``, both closed) or an interval with ``lo < hi``."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty piece: lo={self.lo} > hi={self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("a degenerate piece must be a closed point")

    @classmethod
    def point(cls, a: object) -> "Piece":
        g = grade(a)
        return cls(g, g, True, True)

    @classmethod
    def interval(cls, lo: object, hi: object, lo_closed: bool = True, hi_closed: bool = True) -> "Piece":
        lo_g, hi_g = grade(lo), grade(hi)
        if lo_g == hi_g:
            if lo_closed and hi_closed:
                return cls(lo_g, hi_g, True, True)
            raise EmptyHFE(f"interval with endpoints {lo_g} and flags ({lo_closed}, {hi_closed}) is empty")
        return cls(lo_g, hi_g, lo_closed, hi_closed)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Fraction) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self) -> str:
        if self.is_point:
            return "{" + _fmt(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


class Bound(NamedTuple):
    value: Fraction
    attained: bool


@dataclass(frozen=True)
class IntervalUnionHFE:
    """Nonempty finite union of points and intervals in [0, 1], in canonical form.

    Construct through :meth:`from_pieces` (or :meth:`parse`); the constructor
    expects pieces that are already sorted, disjoint and non-touching.
    """

    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise EmptyHFE("a hesitant fuzzy element must be nonempty")
        if _canonical(self.pieces) != self.pieces:
            raise ValueError("pieces are not canonical; use IntervalUnionHFE.from_pieces()")

    @classmethod
    def from_pieces(cls, pieces: Iterable[Piece]) -> "IntervalUnionHFE":
        canon = _canonical(tuple(pieces))
        if not canon:
            raise EmptyHFE("a hesitant fuzzy element must be nonempty")
        return cls(canon)

    @classmethod
    def from_thfe(cls, a: THFE) -> "IntervalUnionHFE":
        return cls(tuple(Piece(g, g) for g in a.grades))

    @classmethod
    def parse(cls, doc: Iterable[dict]) -> "IntervalUnionHFE":
        """Build from the literal form ``[{"point": 0.2}, {"lo": .., "hi": .., ...}]``."""
        pieces = []
        for item in doc:
            if not isinstance(item, dict):
                raise RangeError(f"piece must be an object, got {item!r}")
            if "point" in item:
                pieces.append(Piece.point(item["point"]))
            else:
                try:
                    lo, hi = item["lo"], item["hi"]
                except KeyError as exc:
                    raise RangeError(f"piece {item!r} needs 'point' or 'lo'/'hi'") from exc
                pieces.append(
                    Piece.interval(lo, hi, bool(item.get("lo_closed", True)), bool(item.get("hi_closed", True)))
                )
        return cls.from_pieces(pieces)

    def to_doc(self) -> list[dict]:
        out: list[dict] = []
        for p in self.pieces:
            if p.is_point:
                out.append({"point": p.lo})
            else:
                out.append({"lo": p.lo, "hi": p.hi, "lo_closed": p.lo_closed, "hi_closed": p.hi_closed})
        return out

    @property
    def is_finite(self) -> bool:
        return all(p.is_point for p in self.pieces)

    def to_thfe(self) -> THFE:
        if not self.is_finite:
            raise ValueError(f"{self} is not a finite set")
        return THFE(tuple(p.lo for p in self.pieces))

    def inf(self) -> Bound:
        p = self.pieces[0]
        return Bound(p.lo, p.lo_closed)

    def sup(self) -> Bound:
        p = self.pieces[-1]
        return Bound(p.hi, p.hi_closed)

    def __contains__(self, x: object) -> bool:
        x = Fraction(x)  # type: ignore[arg-type]
        return any(p.contains(x) for p in self.pieces)

    def complement(self) -> "IntervalUnionHFE":
        return IntervalUnionHFE(
            tuple(Piece(_ONE - p.hi, _ONE - p.lo, p.hi_closed, p.lo_closed) for p in reversed(self.pieces))
        )

    def __str__(self) -> str:
        return " u ".join(str(p) for p in self.pieces)


HFE = Union[THFE, IntervalUnionHFE]
MaybeEmpty = Union[THFE, IntervalUnionHFE, EmptySet]


def _canonical(pieces: tuple[Piece, ...]) -> tuple[Piece, ...]:
    return _sweep(pieces, (), lambda a, b: a)


def _sweep(a: tuple[Piece, ...], b: tuple[Piece, ...], op) -> tuple[Piece, ...]:
    """Evaluate ``op`` on membership over the elementary cells cut out by all endpoints.

    Every endpoint of either operand is a cut. Membership is constant on each
    cut point and on each open gap between consecutive cuts, so the result is
    assembled from those cells and maximal runs are merged.
    """
    cuts = sorted({p.lo for p in a} | {p.hi for p in a} | {p.lo for p in b} | {p.hi for p in b})
    out: list[Piece] = []
    run_lo: Fraction | None = None
    run_lo_closed = False

    def member(pieces: tuple[Piece, ...], x: Fraction) -> bool:
        return any(p.contains(x) for p in pieces)

    # cells alternate: point c_i, gap (c_i, c_{i+1}), point c_{i+1}, ...
    for i, c in enumerate(cuts):
        inside = op(member(a, c), member(b, c))
        if inside:
            if run_lo is None:
                run_lo, run_lo_closed = c, True
        elif run_lo is not None:
            out.append(Piece(run_lo, c, run_lo_closed, False) if run_lo != c else Piece(c, c))
            run_lo = None
        if i + 1 < len(cuts):
            mid = (c + cuts[i + 1]) / 2
            gap_inside = op(member(a, mid), member(b, mid))
            if gap_inside:
                if run_lo is None:
                    run_lo, run_lo_closed = c, False
            elif run_lo is not None:
                out.append(Piece(run_lo, c, run_lo_closed, True))
                run_lo = None
    if run_lo is not None:
        last = cuts[-1]
        out.append(Piece(run_lo, last, run_lo_closed, True))
    return tuple(out)


def as_intervals(x: HFE) -> IntervalUnionHFE:
    return x if isinstance(x, IntervalUnionHFE) else IntervalUnionHFE.from_thfe(x)


def _binary(a: MaybeEmpty, b: MaybeEmpty, op, finite_op) -> MaybeEmpty:
    if isinstance(a, EmptySet) or isinstance(b, EmptySet):
        a_p = () if isinstance(a, EmptySet) else as_intervals(a).pieces
        b_p = () if isinstance(b, EmptySet) else as_intervals(b).pieces
        if isinstance(a, (THFE, EmptySet)) and isinstance(b, (THFE, EmptySet)):
            return _from_set(finite_op(frozenset(a), frozenset(b)))
        pieces = _sweep(a_p, b_p, op)
        return IntervalUnionHFE(pieces) if pieces else EMPTY
    if isinstance(a, THFE) and isinstance(b, THFE):
        return _from_set(finite_op(a.as_set(), b.as_set()))
    pieces = _sweep(as_intervals(a).pieces, as_intervals(b).pieces, op)
    return IntervalUnionHFE(pieces) if pieces else EMPTY


def set_union(a: MaybeEmpty, b: MaybeEmpty) -> MaybeEmpty:
    return _binary(a, b, lambda x, y: x or y, frozenset.union)


def set_intersection(a: MaybeEmpty, b: MaybeEmpty) -> MaybeEmpty:
    return _binary(a, b, lambda x, y: x and y, frozenset.intersection)


def set_difference(a: MaybeEmpty, b: MaybeEmpty) -> MaybeEmpty:
    """``a`` minus ``b``; returns :data:`EMPTY` when nothing is left."""
    return _binary(a, b, lambda x, y: x and not y, frozenset.difference)


def _inf(x: HFE) -> Bound:
    return Bound(x.inf(), True) if isinstance(x, THFE) else x.inf()


def _sup(x: HFE) -> Bound:
    return Bound(x.sup(), True) if isinstance(x, THFE) else x.sup()


def strictly_below(x: MaybeEmpty, y: MaybeEmpty) -> bool:
    """True iff every element of ``x`` is strictly less than every element of ``y``.

    Vacuously true if either side is empty.
    """
    if isinstance(x, EmptySet) or isinstance(y, EmptySet):
        return True
    top, bottom = _sup(x), _inf(y)
    if top.value != bottom.value:
        return top.value < bottom.value
    return not (top.attained and bottom.attained)


def complement(x: MaybeEmpty) -> MaybeEmpty:
    """The set ``1 - x``."""
    if isinstance(x, EmptySet):
        return EMPTY
    return x.complement()
