"""Random generators shared by the test modules.

Everything draws from the 1/20 grid of [0, 1] so values stay exact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from hesitant import THFE, IntervalUnionHFE, Piece
from hesitant.orders import OrderKind, leq

GRID = tuple(Fraction(i, 20) for i in range(21))


def thfe(*values) -> THFE:
    return THFE.of(*map(str, values))


def random_thfe(rng: random.Random, max_card: int = 5, grid=GRID) -> THFE:
    k = rng.randint(1, min(max_card, len(grid)))
    return THFE(tuple(sorted(rng.sample(grid, k))))


def upward_mutation(rng: random.Random, a: THFE, keep_size: bool = False, grid=GRID) -> THFE:
    """Nudge ``a`` upwards with a few random moves; the result need not dominate ``a``."""
    g = list(a.grades)
    for _ in range(rng.randint(1, 3)):
        move = 0 if keep_size else rng.randrange(3)
        if move == 0:
            i = rng.randrange(len(g))
            higher = [x for x in grid if x > g[i] and x not in g]
            if higher:
                g[i] = rng.choice(higher[:3])
        elif move == 1 and len(g) > 1:
            g.remove(min(g))
        else:
            above = [x for x in grid if x > max(g)]
            if above and len(g) < 5:
                g.append(rng.choice(above))
        g = sorted(set(g))
    return THFE(tuple(g))


def comparable_pair(rng: random.Random, order: OrderKind, tries: int = 50) -> tuple[THFE, THFE]:
    """A pair ``(a, b)`` with ``a <= b`` under ``order``, found by upward mutation."""
    keep = order is OrderKind.LIST
    while True:
        a = random_thfe(rng)
        for _ in range(tries):
            b = upward_mutation(rng, a, keep_size=keep)
            if leq(order, a, b):
                return a, b
        if leq(order, a, a):
            return a, a


def chain_above(rng: random.Random, order: OrderKind, a: THFE, tries: int = 50) -> THFE:
    keep = order is OrderKind.LIST
    for _ in range(tries):
        b = upward_mutation(rng, a, keep_size=keep)
        if leq(order, a, b):
            return b
    return a


def symmetric_upper(rng: random.Random, a: THFE, grid=GRID) -> THFE:
    """Drop a run of low grades of ``a`` and add grades above its maximum."""
    while True:
        kept = list(a.grades[rng.randint(0, len(a)):])
        above = [x for x in grid if x > a.sup()]
        added = rng.sample(above, rng.randint(0, min(2, len(above)))) if above else []
        out = sorted(set(kept + added))
        if out:
            return THFE(tuple(out))


def list_upper(rng: random.Random, a: THFE, grid=GRID) -> THFE:
    """Same cardinality, componentwise at least ``a``."""
    out: list[Fraction] = []
    ceiling = None
    for x in reversed(a.grades):
        choices = [g for g in grid if g >= x and (ceiling is None or g < ceiling)]
        ceiling = rng.choice(choices)
        out.append(ceiling)
    return THFE(tuple(reversed(out)))


def random_piece(rng: random.Random, grid=GRID) -> Piece:
    i, j = sorted(rng.sample(range(len(grid)), 2))
    if rng.random() < 0.3:
        return Piece(grid[i], grid[i])
    return Piece(grid[i], grid[j], rng.random() < 0.5, rng.random() < 0.5)


def random_union(rng: random.Random, max_pieces: int = 3) -> IntervalUnionHFE:
    return IntervalUnionHFE.from_pieces(random_piece(rng) for _ in range(rng.randint(1, max_pieces)))


# hypothesis strategies

grid_index_sets = st.lists(st.integers(0, 20), min_size=1, max_size=5, unique=True)
thfes = grid_index_sets.map(lambda idx: THFE(tuple(sorted(GRID[i] for i in idx))))


@st.composite
def pieces(draw):
    i = draw(st.integers(0, 20))
    j = draw(st.integers(i, 20))
    if i == j:
        return Piece(GRID[i], GRID[i])
    return Piece(GRID[i], GRID[j], draw(st.booleans()), draw(st.booleans()))


unions = st.lists(pieces(), min_size=1, max_size=4).map(IntervalUnionHFE.from_pieces)
hfes = st.one_of(thfes, unions)
