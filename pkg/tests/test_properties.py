import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from hesitant.errors import OracleBudgetError, SampleError
from hesitant.properties import (
    NAMED_SCORES,
    PropertyKind,
    check_em,
    check_gardenfors,
    check_interval_monotone,
    check_monotone,
    check_smu,
    check_wmu,
    closed_family_equivalence_suite,
    closed_interval,
    disjoint_strict_orders_agree,
    grid_family,
    parse_grid,
)
from hesitant.scores import ScoreKind
from helpers import GRID, thfe, thfes

FIVE = ["0", "0.25", "0.5", "0.75", "1"]


def midpoint(a, b):
    return (a + b) / 2


def left_end(a, b):
    return a


class TestUnions:
    def test_mean_smu(self):
        report = check_smu(ScoreKind.MEAN, [(thfe(0.1, 0.2), thfe(0.5))])
        assert report.holds_on_sample and report.property is PropertyKind.SMU

    def test_max_fails_smu_but_not_wmu(self):
        pair = (thfe(0.1), thfe(0.5))
        smu = check_smu(ScoreKind.MAX, [pair])
        assert not smu.holds_on_sample and smu.counterexample == pair
        assert check_wmu(ScoreKind.MAX, [pair]).holds_on_sample

    def test_rejects_unseparated_pairs(self):
        with pytest.raises(SampleError):
            check_wmu(ScoreKind.MEAN, [(thfe(0.1, 0.5), thfe(0.5))])
        with pytest.raises(SampleError):
            check_smu(ScoreKind.MEAN, [(thfe(0.6), thfe(0.2))])


class TestGardenfors:
    def test_min_above_maximum(self):
        assert not check_gardenfors(ScoreKind.MIN, [(thfe(0.4), "0.9")]).holds_on_sample
        assert check_gardenfors(ScoreKind.MIN, [(thfe(0.4), "0.9")], strict=False).holds_on_sample

    def test_mean(self):
        sample = [(thfe(0.4, 0.6), "0.1"), (thfe(0.4, 0.6), "0.9"), (thfe(0.4, 0.6), "0.5")]
        report = check_gardenfors(ScoreKind.MEAN, sample)
        assert report.holds_on_sample and report.property is PropertyKind.G

    def test_product_fails_weak(self):
        report = check_gardenfors(ScoreKind.PRODUCT, [(thfe(0.2), "0.3")], strict=False)
        assert report.property is PropertyKind.WG
        assert report.counterexample == (thfe(0.2), Fraction(3, 10))

    def test_member_rejected(self):
        with pytest.raises(SampleError):
            check_gardenfors(ScoreKind.MEAN, [(thfe(0.4), "0.4")])


class TestExtremes:
    def test_midpoint(self):
        assert check_em(midpoint, [(("0.1", "0.4"), ("0.3", "0.4")), (("0.1", "0.4"), ("0.1", "0.5"))]).holds_on_sample

    def test_left_endpoint(self):
        report = check_em(left_end, [(("0.1", "0.4"), ("0.1", "0.5"))])
        assert not report.holds_on_sample and report.property is PropertyKind.EM

    def test_bad_configuration(self):
        with pytest.raises(SampleError):
            check_em(midpoint, [(("0.1", "0.4"), ("0.2", "0.5"))])
        with pytest.raises(SampleError):
            check_em(midpoint, [(("0.5", "0.4"), ("0.5", "0.6"))])

    def test_interval_monotonicity(self):
        sample = [(("0.1", "0.4"), ("0.1", "0.5")), (("0.2", "0.3"), ("0.1", "0.6"))]
        assert check_interval_monotone(midpoint, sample, strict=True) is None
        assert check_interval_monotone(left_end, sample, strict=False) is None
        assert check_interval_monotone(left_end, sample, strict=True) is not None

    def test_closed_interval(self):
        x = closed_interval("0.2", "0.4")
        assert Fraction(3, 10) in x and Fraction(1, 2) not in x


class TestFamilies:
    def test_parse_grid(self):
        assert parse_grid("0:1:0.25") == [Fraction(i, 4) for i in range(5)]
        assert parse_grid("0.1, 0.3") == [Fraction(1, 10), Fraction(3, 10)]
        with pytest.raises(SampleError):
            parse_grid("0:1")
        with pytest.raises(SampleError):
            parse_grid("0:1:0")

    def test_family_size(self):
        assert len(grid_family(FIVE)) == 31
        with pytest.raises(OracleBudgetError):
            grid_family([Fraction(i, 20) for i in range(11)])

    def test_monotone(self):
        family = grid_family(FIVE)
        assert check_monotone(ScoreKind.MEAN, family, strict=True) is None
        assert check_monotone(ScoreKind.PRODUCT, family) is not None

    @pytest.mark.parametrize(
        "name,weak,strong",
        [("mean", True, True), ("min", True, False), ("max", True, False), ("product", False, False), ("const", True, False)],
    )
    def test_equivalence_suite(self, name, weak, strong):
        report = closed_family_equivalence_suite(NAMED_SCORES[name], FIVE)
        assert report.consistent
        assert report.weak_verdicts == (weak,) * 3
        assert report.strong_verdicts == (strong,) * 3


class TestDisjointPairs:
    def test_exhaustive_on_grid(self):
        family = grid_family(FIVE)
        checked = 0
        for x, y in product(family, family):
            if x.as_set() & y.as_set():
                continue
            assert disjoint_strict_orders_agree(x, y)
            checked += 1
        assert checked > 100

    @given(thfes, thfes)
    def test_random(self, x, y):
        if not x.as_set() & y.as_set():
            assert disjoint_strict_orders_agree(x, y)

    def test_overlap_rejected(self):
        with pytest.raises(SampleError):
            disjoint_strict_orders_agree(thfe(0.1, 0.2), thfe(0.2))
