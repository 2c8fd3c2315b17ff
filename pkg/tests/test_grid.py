from fractions import Fraction
from random import Random

import pytest

from simplexopt import (
    GridPoint,
    HomogeneousPolynomial,
    coefficient_range_bounds,
    composition_rank,
    composition_unrank,
    enumerate_grid,
    evaluate,
    grid_maximize,
    grid_minimize,
    grid_size,
    iter_grid_range,
    motzkin_straus,
    parse_polynomial,
    sum_of_powers_grid_min,
)
from conftest import naive_evaluate, random_polynomial

F = Fraction


def sum_of_powers(n: int, d: int) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(
        n, d, {tuple(d if j == i else 0 for j in range(n)): F(1) for i in range(n)}
    )


def brute_minimum(f, r):
    """Independent full enumeration with the naive evaluator."""
    best = None
    best_alpha = None
    for alpha in enumerate_grid(f.n, r):
        value = naive_evaluate(f, [F(a, r) for a in alpha])
        if best is None or value < best:
            best, best_alpha = value, alpha
    return best, best_alpha


class TestEnumeration:
    def test_examples(self):
        assert list(enumerate_grid(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(enumerate_grid(3, 1)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
        assert sum(1 for _ in enumerate_grid(3, 4)) == 15

    def test_grid_size(self):
        assert grid_size(2, 2) == 3
        assert grid_size(10, 10) == 92378
        for n in range(1, 6):
            assert grid_size(n, 0) == 1

    def test_rank_unrank_round_trip(self):
        for n in range(1, 5):
            for r in range(0, 6):
                for rank, alpha in enumerate(enumerate_grid(n, r)):
                    assert composition_rank(alpha) == rank
                    assert composition_unrank(n, r, rank) == alpha

    def test_unrank_out_of_range(self):
        with pytest.raises(ValueError):
            composition_unrank(3, 2, 6)
        with pytest.raises(ValueError):
            composition_unrank(3, 2, -1)

    def test_range_validation(self):
        with pytest.raises(ValueError):
            list(iter_grid_range(3, 2, 2, 1))
        with pytest.raises(ValueError):
            list(iter_grid_range(3, 2, 0, 7))
        assert list(iter_grid_range(3, 2, 3, 3)) == []

    def test_size_validation(self):
        with pytest.raises(ValueError):
            grid_size(0, 2)
        with pytest.raises(ValueError):
            grid_size(2, -1)

    def test_partitioned_ranges_cover_grid(self):
        full = list(enumerate_grid(4, 5))
        total = grid_size(4, 5)
        cuts = [0, 10, 11, 40, total]
        stitched = []
        for lo, hi in zip(cuts, cuts[1:]):
            stitched.extend(iter_grid_range(4, 5, lo, hi))
        assert stitched == full


class TestGridPoint:
    def test_coordinates_sum_to_one(self):
        p = GridPoint((1, 2, 0), 3)
        assert sum(p.coordinates()) == 1
        assert p.coordinates() == (F(1, 3), F(2, 3), F(0))

    def test_validation(self):
        with pytest.raises(ValueError):
            GridPoint((1, 1), 3)
        with pytest.raises(ValueError):
            GridPoint((0,), 0)


class TestMinimize:
    def test_example_quadratic(self):
        f = parse_polynomial("2*x1^2 + x2^2 - 5*x1*x2", 2)
        gm = grid_minimize(f, 2)
        assert gm.value == F(-1, 2)
        assert gm.argmin.alpha == (1, 1)
        assert gm.evaluations == 3

    def test_cubic_parity_example(self):
        f = parse_polynomial("x1^3 + x2^3", 2)
        assert grid_minimize(f, 3).value == F(1, 3)
        assert grid_minimize(f, 4).value == F(1, 4)

    def test_squarefree_example(self):
        f = parse_polynomial("-x1*x2", 2)
        assert grid_minimize(f, 4).value == F(-1, 4)

    def test_zero_polynomial(self):
        zero = parse_polynomial("x1 - x1", 1)
        gm = grid_minimize(zero, 3)
        assert gm.value == 0 and gm.argmin.alpha == (3,)

    def test_rejects_order_zero(self):
        f = parse_polynomial("x1^2", 1)
        with pytest.raises(ValueError):
            grid_minimize(f, 0)

    def test_matches_brute_force(self, rng):
        for _ in range(40):
            n = rng.randint(1, 4)
            d = rng.randint(0, 4)
            r = rng.randint(1, 5)
            f = random_polynomial(rng, n, d)
            gm = grid_minimize(f, r)
            value, alpha = brute_minimum(f, r)
            assert gm.value == value
            assert gm.argmin.alpha == alpha
            assert gm.evaluations == grid_size(n, r)

    def test_tie_break_is_lexicographic(self):
        f = parse_polynomial("x1^2 + x2^2", 2)  # symmetric: minimizers come in pairs
        gm = grid_minimize(f, 3)
        assert gm.argmin.alpha == (1, 2)

    def test_value_dominates_coefficient_lower_bound(self, rng):
        for _ in range(20):
            n = rng.randint(1, 4)
            d = rng.randint(1, 4)
            f = random_polynomial(rng, n, d)
            low, _ = coefficient_range_bounds(f)
            for r in range(1, 7):
                assert grid_minimize(f, r).value >= low

    def test_parallel_tie_break_on_constant_values(self):
        # every grid point ties: the first chunk's first point must win
        zero = parse_polynomial("x1 - x1", 3)
        for threads in (2, 5):
            gm = grid_minimize(zero, 4, threads=threads)
            assert gm.value == 0 and gm.argmin.alpha == (0, 0, 4)
            gx = grid_maximize(zero, 4, threads=threads)
            assert gx.argmin.alpha == (0, 0, 4)

    def test_accepts_mixed_degree_polynomials(self):
        from simplexopt import GeneralPolynomial, bernstein_quadratic

        f = parse_polynomial("2*x1^2 + x2^2 - 5*x1*x2", 2)
        smoothed = bernstein_quadratic(f, 2).reduced
        assert isinstance(smoothed, GeneralPolynomial)
        gm = grid_minimize(smoothed, 8)
        # smoothing never dips below the order-2 grid minimum of f
        assert gm.value >= grid_minimize(f, 2).value
        assert gm.value == min(
            naive_evaluate(smoothed, [F(a, 8), F(8 - a, 8)]) for a in range(9)
        )

    def test_parallel_identical_to_sequential(self, rng):
        for _ in range(15):
            n = rng.randint(1, 4)
            d = rng.randint(0, 4)
            r = rng.randint(1, 7)
            f = random_polynomial(rng, n, d)
            seq = grid_minimize(f, r)
            par = grid_minimize(f, r, threads=3)
            assert (seq.value, seq.argmin) == (par.value, par.argmin)
            seqx = grid_maximize(f, r)
            parx = grid_maximize(f, r, threads=4)
            assert (seqx.value, seqx.argmin) == (parx.value, parx.argmin)


class TestMaximize:
    def test_sum_of_squares_vertex(self):
        f = sum_of_powers(3, 2)
        for r in (1, 2, 5):
            gm = grid_maximize(f, r)
            assert gm.value == 1
            assert gm.argmin.alpha == (0, 0, r)

    def test_zero_polynomial(self):
        zero = parse_polynomial("x1 - x1", 1)
        assert grid_maximize(zero, 2).value == 0

    def test_cross_term_argmax_tie_break(self):
        f = parse_polynomial("-x1*x2", 2)
        gm = grid_maximize(f, 2)
        assert gm.value == 0
        assert gm.argmin.alpha == (0, 2)


class TestSumOfPowersOracle:
    @pytest.mark.parametrize(
        "n, r, d, expected",
        [(2, 3, 2, F(5, 9)), (2, 4, 3, F(1, 4)), (3, 3, 2, F(1, 3))],
    )
    def test_examples(self, n, r, d, expected):
        assert sum_of_powers_grid_min(n, r, d) == expected

    def test_agrees_with_grid_minimize(self):
        for n in range(1, 5):
            for r in range(1, 9):
                for d in range(1, 5):
                    f = sum_of_powers(n, d)
                    assert grid_minimize(f, r).value == sum_of_powers_grid_min(n, r, d)

    def test_even_split_ratio_identity(self):
        # n even, r = 3n/2: the gap equals (max - min) / (6r - 9)
        for n in (2, 4, 6):
            r = 3 * n // 2
            gap = sum_of_powers_grid_min(n, r, 2) - F(1, n)
            assert gap == (1 - F(1, n)) / (6 * r - 9)


class TestStableSetGridProperty:
    def all_graphs(self, n):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            adj = [[0] * n for _ in range(n)]
            for bit, (i, j) in enumerate(pairs):
                if mask >> bit & 1:
                    adj[i][j] = adj[j][i] = 1
            yield adj

    def stable_set_number(self, adj):
        from simplexopt import brute_force_stable_set_number

        return brute_force_stable_set_number(adj)

    def test_grid_min_dominates_reciprocal_alpha_exhaustive(self):
        for n in range(1, 5):
            for adj in self.all_graphs(n):
                f = motzkin_straus(adj)
                alpha = self.stable_set_number(adj)
                for r in range(1, 5):
                    assert grid_minimize(f, r).value >= F(1, alpha)

    def test_grid_min_dominates_reciprocal_alpha_sampled(self):
        rng = Random(7)
        for n in (5, 6):
            for _ in range(120):
                adj = [[0] * n for _ in range(n)]
                for i in range(n):
                    for j in range(i + 1, n):
                        if rng.random() < 0.5:
                            adj[i][j] = adj[j][i] = 1
                f = motzkin_straus(adj)
                alpha = self.stable_set_number(adj)
                for r in range(1, 5):
                    assert grid_minimize(f, r).value >= F(1, alpha)
