"""Shared test helpers: seeded random polynomials and naive oracles."""

from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest

from simplexopt import HomogeneousPolynomial, composition_unrank, grid_size


def random_polynomial(
    rng: Random,
    n: int,
    d: int,
    max_terms: int = 6,
    square_free: bool = False,
) -> HomogeneousPolynomial:
    """Random sparse polynomial with small rational coefficients."""
    from math import comb

    population = comb(n, d) if square_free else grid_size(n, d)
    want = rng.randint(1, min(max_terms, population))
    terms: dict = {}
    while len(terms) < want:
        if square_free:
            support = rng.sample(range(n), d)
            beta = tuple(1 if i in support else 0 for i in range(n))
        else:
            beta = composition_unrank(n, d, rng.randrange(population))
        numer = rng.randint(-9, 9) or 1
        terms[beta] = Fraction(numer, rng.randint(1, 9))
    return HomogeneousPolynomial(n, d, terms)


def naive_evaluate(f, x) -> Fraction:
    """Straightforward Fraction-by-Fraction evaluation, kept independent of
    the library's integer-cleared fast path."""
    point = [Fraction(v) for v in x]
    total = Fraction(0)
    for beta, c in f.terms.items():
        term = c
        for e, v in zip(beta, point):
            if e:
                term *= v**e
        total += term
    return total


@pytest.fixture
def rng() -> Random:
    return Random(20260808)
