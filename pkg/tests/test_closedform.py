"""Closed-form path: difference values, normalized values, correlators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tau2.closedform import (
    a_closed,
    b_domain_max,
    b_value,
    clear_caches,
    normalize,
    two_point_closed,
)
from tau2.combinatorics import double_factorial_odd
from tau2.recursion import build_table, one_point


class TestBDomain:
    @pytest.mark.parametrize("g,expected", [(1, 0), (2, 1), (3, 3), (4, 4), (5, 6), (10, 13)])
    def test_domain_max(self, g, expected):
        assert b_domain_max(g) == expected


class TestBValue:
    @pytest.mark.parametrize(
        "g,k,expected",
        [
            (1, 0, Fraction(-2, 5)),
            (2, 0, Fraction(-2, 11)),
            (2, 1, Fraction(2, 33)),
            (3, 0, Fraction(-2, 17)),
            (3, 1, Fraction(2, 85)),
            (3, 2, Fraction(1, 221)),
            (3, 3, Fraction(-28, 2431)),
        ],
    )
    def test_frozen_anchors(self, g, k, expected):
        assert b_value(g, k) == expected

    @pytest.mark.parametrize("g,k", [(1, 1), (2, 2), (3, 4), (2, -1)])
    def test_out_of_domain_rejected(self, g, k):
        with pytest.raises(ValueError, match="difference index"):
            b_value(g, k)

    def test_rejects_genus_below_one(self):
        with pytest.raises(ValueError):
            b_value(0, 0)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=15), st.data())
    def test_telescopes_to_a_differences(self, g, data):
        k = data.draw(st.integers(min_value=0, max_value=b_domain_max(g)))
        assert b_value(g, k) == a_closed(g, k + 1) - a_closed(g, k)

    def test_self_paired_midpoint_is_one_past_domain(self):
        # the k with a(g,k+1) = a(g,k) mirrored onto itself sits just outside
        for g in (2, 4, 8):
            midpoint = (3 * g - 2) // 2
            assert midpoint == b_domain_max(g) + 1
            with pytest.raises(ValueError):
                b_value(g, midpoint)

    def test_signs_follow_residue_classes(self):
        for g in range(2, 10):
            for k in range(b_domain_max(g) + 1):
                v = b_value(g, k)
                r = k % 3
                if r == 0:
                    assert v < 0, (g, k)
                elif r == 1:
                    assert v > 0, (g, k)


class TestAClosed:
    def test_base_value(self):
        for g in range(1, 21):
            assert a_closed(g, 0) == 1

    def test_next_value(self):
        for g in range(1, 21):
            assert a_closed(g, 1) == Fraction(6 * g - 3, 6 * g - 1)

    @pytest.mark.parametrize(
        "g,k,expected",
        [
            (1, 1, Fraction(3, 5)),
            (2, 1, Fraction(9, 11)),
            (2, 2, Fraction(29, 33)),
            (3, 1, Fraction(15, 17)),
            (3, 2, Fraction(77, 85)),
        ],
    )
    def test_frozen_anchors(self, g, k, expected):
        assert a_closed(g, k) == expected

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=15), st.data())
    def test_symmetry(self, g, data):
        k = data.draw(st.integers(min_value=0, max_value=3 * g - 1))
        assert a_closed(g, k) == a_closed(g, 3 * g - 1 - k)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match=r"k must be in 0\.\.5"):
            a_closed(2, 6)
        with pytest.raises(ValueError):
            a_closed(2, -1)
        with pytest.raises(ValueError):
            a_closed(0, 0)


class TestNormalizeAndTwoPointClosed:
    def test_normalize_unscales_to_a(self):
        for g in range(1, 9):
            for k in range(3 * g):
                corr = two_point_closed(g, k)
                assert normalize(g, k, corr) == a_closed(g, k)

    def test_scale_shape(self):
        # a(g,k) = (2k+1)!!(6g-1-2k)!! 24^g g! / (6g-1)!! * correlator
        from math import factorial

        g, k = 3, 2
        scale = Fraction(
            double_factorial_odd(2 * k + 1)
            * double_factorial_odd(6 * g - 1 - 2 * k)
            * 24**g
            * factorial(g),
            double_factorial_odd(6 * g - 1),
        )
        assert normalize(g, k, Fraction(1)) == scale

    def test_string_endpoint(self):
        for g in range(1, 12):
            assert two_point_closed(g, 0) == one_point(g)

    def test_dilaton_endpoint(self):
        for g in range(1, 12):
            assert two_point_closed(g, 1) == (2 * g - 1) * one_point(g)

    @pytest.mark.parametrize(
        "g,k,expected",
        [
            (1, 1, Fraction(1, 24)),
            (2, 2, Fraction(29, 5760)),
            (3, 2, Fraction(77, 414720)),
            (3, 4, Fraction(607, 1451520)),
        ],
    )
    def test_frozen_anchors(self, g, k, expected):
        assert two_point_closed(g, k) == expected

    def test_matches_recursive_path(self):
        table = build_table(10)
        for g in range(1, 11):
            for k in range(3 * g):
                assert two_point_closed(g, k) == table.value(g, k), (g, k)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match=r"k must be in 0\.\.5"):
            two_point_closed(2, 7)

    def test_positive_everywhere(self):
        for g in range(1, 12):
            for k in range(3 * g):
                assert two_point_closed(g, k) > 0


class TestCaches:
    def test_clear_caches_keeps_values(self):
        before = two_point_closed(7, 5)
        clear_caches()
        assert two_point_closed(7, 5) == before
        clear_caches()
        clear_caches()
