from fractions import Fraction

import pytest

from simplexopt.combinatorics import (
    StirlingTable,
    check_identity_falling_sum,
    check_identity_stirling_split,
    compositions,
    falling_factorial,
    falling_sum_sides,
    multinomial,
    stirling2,
    stirling_split_sides,
    surjection_count,
)


def brute_partition_count(b: int, a: int) -> int:
    """Count partitions of {0..b-1} into exactly a nonempty blocks by
    enumerating block assignments in canonical order."""

    def grow(element: int, blocks: int) -> int:
        if element == b:
            return 1 if blocks == a else 0
        total = blocks * grow(element + 1, blocks)  # join an existing block
        if blocks < a:
            total += grow(element + 1, blocks + 1)  # open a new block
        return total

    return grow(0, 0)


class TestCompositions:
    def test_lexicographic_order_and_count(self):
        got = list(compositions(3, 2))
        assert got == sorted(got)
        assert got == [(0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0)]

    def test_single_slot_and_zero_total(self):
        assert list(compositions(1, 5)) == [(5,)]
        assert list(compositions(4, 0)) == [(0, 0, 0, 0)]

    def test_counts_match_binomials(self):
        from math import comb

        for n in range(1, 5):
            for r in range(0, 6):
                assert sum(1 for _ in compositions(n, r)) == comb(n + r - 1, r)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            list(compositions(0, 2))
        with pytest.raises(ValueError):
            list(compositions(2, -1))


class TestFallingFactorial:
    @pytest.mark.parametrize(
        "r, d, expected", [(5, 3, 60), (3, 5, 0), (7, 0, 1), (4, 4, 24), (1, 1, 1)]
    )
    def test_values(self, r, d, expected):
        assert falling_factorial(r, d) == expected

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            falling_factorial(-1, 2)


class TestStirling:
    def test_known_values(self):
        assert stirling2(4, 2) == 7
        assert stirling2(3, 1) == 1
        for d in range(0, 9):
            assert stirling2(d, d) == 1
        assert stirling2(0, 0) == 1
        assert stirling2(5, 0) == 0
        assert stirling2(2, 5) == 0

    def test_against_partition_enumeration(self):
        for b in range(0, 8):
            for a in range(0, b + 1):
                assert stirling2(b, a) == brute_partition_count(b, a)

    def test_table_recurrence(self):
        table = StirlingTable.build(9)
        assert table.value(0, 0) == 1
        for b in range(1, 10):
            assert table.value(b, 0) == 0
            for a in range(1, b + 1):
                assert table.value(b, a) == table.value(b - 1, a - 1) + a * table.value(b - 1, a)

    def test_table_bounds(self):
        table = StirlingTable.build(4)
        assert table.value(3, 4) == 0
        with pytest.raises(ValueError):
            table.value(5, 1)


class TestMultinomial:
    @pytest.mark.parametrize(
        "r, alpha, expected",
        [(2, (1, 1), 2), (4, (2, 2), 6), (5, (5, 0, 0), 1), (0, (), 1), (6, (1, 2, 3), 60)],
    )
    def test_values(self, r, alpha, expected):
        assert multinomial(r, alpha) == expected

    def test_rejects_mismatched_total(self):
        with pytest.raises(ValueError):
            multinomial(3, (1, 1))

    def test_factorial_identity(self):
        from math import factorial

        for alpha in compositions(3, 6):
            prod = 1
            for a in alpha:
                prod *= factorial(a)
            assert multinomial(6, alpha) * prod == factorial(6)


class TestSurjections:
    @pytest.mark.parametrize("d, k, expected", [(3, 2, 6), (4, 1, 1), (2, 3, 0), (0, 0, 1)])
    def test_values(self, d, k, expected):
        assert surjection_count(d, k) == expected

    def test_matches_stirling(self):
        from math import factorial

        for d in range(0, 9):
            for k in range(0, d + 1):
                assert surjection_count(d, k) == factorial(k) * stirling2(d, k)

    def test_brute_force_guard(self):
        with pytest.raises(ValueError):
            surjection_count(11, 2)
        with pytest.raises(ValueError):
            surjection_count(-1, 2)


class TestIdentities:
    def test_falling_sum_example(self):
        lhs, rhs = falling_sum_sides(3, 4)
        assert (lhs, rhs) == (40, 40)
        assert check_identity_falling_sum(3, 4)

    def test_falling_sum_degree_one(self):
        for r in range(1, 10):
            assert check_identity_falling_sum(1, r)

    def test_falling_sum_small(self):
        assert check_identity_falling_sum(2, 2)

    def test_stirling_split_examples(self):
        lhs, rhs = stirling_split_sides((1, 1), 3)
        assert lhs == rhs == Fraction(3)
        assert check_identity_stirling_split((2, 1), 4)

    def test_stirling_split_single_coordinate(self):
        for k in range(1, 4):
            for d in range(k + 1, 7):
                assert check_identity_stirling_split((k,), d)

    def test_stirling_split_requires_larger_degree(self):
        with pytest.raises(ValueError):
            check_identity_stirling_split((1, 1), 2)
