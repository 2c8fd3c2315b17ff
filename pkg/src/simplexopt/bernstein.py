"""Bernstein approximation on the simplex, by several independent routes.

The order-r Bernstein approximation of a degree-d homogeneous polynomial f is

    B_r(f)(x) = sum over |alpha| = r of  f(alpha/r) * (r!/alpha!) * x^alpha,

a degree-r homogeneous polynomial whose value at any simplex point is a
convex combination of the values of f on the order-r grid.  Restricted to
the simplex it collapses to a polynomial of degree at most d, which this
module computes three independent ways:

  * definitional     -- the degree-r form above, coefficient by coefficient;
  * closed form      -- per-monomial expansion through falling factorials and
                        Stirling numbers of the second kind:
                        B_r(x^beta) = r^(-|beta|) * sum over gamma <= beta of
                        r^(|gamma| falling) * x^gamma * prod S(beta_i, gamma_i);
  * specialized      -- hand closed forms for quadratic, cubic and square-free
                        inputs.

The same machinery evaluates the moments of the multinomial distribution two
ways (full enumeration vs the Stirling closed form), and a seeded Monte Carlo
random walk provides a floating-point cross-check of B_r(f)(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm, sqrt
from typing import Sequence

import numpy as np

from .combinatorics import (
    MultiIndex,
    compositions,
    falling_factorial,
    multinomial,
    stirling2,
)
from .grid import _integer_numerator, enumerate_grid
from .polynomial import (
    GeneralPolynomial,
    HomogeneousPolynomial,
    RationalLike,
    is_square_free,
)

SOURCE_DEFINITIONAL = "definitional"
SOURCE_CLOSED_FORM = "closed_form"
SOURCE_QUADRATIC = "specialized_quadratic"
SOURCE_CUBIC = "specialized_cubic"
SOURCE_SQUAREFREE = "specialized_squarefree"


@dataclass(frozen=True)
class BernsteinResult:
    """One route's output: the degree-r homogeneous form, the reduced
    (degree <= d) simplex form, or both.  The populated forms agree at every
    point of the simplex."""

    homogeneous: HomogeneousPolynomial | None
    reduced: GeneralPolynomial | None
    r: int
    source: str


def _require_order(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"approximation order must be an integer >= 1, got {r!r}")


def bernstein_definitional(f: HomogeneousPolynomial, r: int) -> BernsteinResult:
    """Degree-r homogeneous form: the coefficient of x^alpha is
    f(alpha/r) * r!/alpha!."""
    _require_order(r)
    num, denom = _integer_numerator(f, r)
    terms: dict[MultiIndex, Fraction] = {}
    for alpha in enumerate_grid(f.n, r):
        v = num(alpha)
        if v:
            terms[alpha] = Fraction(v * multinomial(r, alpha), denom)
    poly = HomogeneousPolynomial(f.n, r, terms)
    return BernsteinResult(homogeneous=poly, reduced=None, r=r, source=SOURCE_DEFINITIONAL)


def _monomial_closed_form(beta: MultiIndex, r: int) -> dict[MultiIndex, Fraction]:
    """Reduced form of the order-r approximation of x^beta.

    Only gamma <= beta with gamma_i >= 1 wherever beta_i >= 1 contribute,
    since S(b, 0) = 0 for b >= 1.
    """
    d = sum(beta)
    scale = r**d
    ranges = [range(1, b + 1) if b else range(0, 1) for b in beta]
    out: dict[MultiIndex, Fraction] = {}
    for gamma in product(*ranges):
        sprod = 1
        for b_i, g_i in zip(beta, gamma):
            sprod *= stirling2(b_i, g_i)
        if sprod:
            weight = Fraction(falling_factorial(r, sum(gamma)) * sprod, scale)
            out[gamma] = out.get(gamma, Fraction(0)) + weight
    return out


def bernstein_closed_form(f: HomogeneousPolynomial, r: int) -> BernsteinResult:
    """Reduced form of degree <= d, built by summing the per-monomial
    Stirling closed forms weighted by the coefficients of f."""
    _require_order(r)
    acc: dict[MultiIndex, Fraction] = {}
    for beta, c in f.terms.items():
        for gamma, w in _monomial_closed_form(beta, r).items():
            acc[gamma] = acc.get(gamma, Fraction(0)) + c * w
    reduced = GeneralPolynomial(f.n, acc)
    return BernsteinResult(homogeneous=None, reduced=reduced, r=r, source=SOURCE_CLOSED_FORM)


def bernstein_quadratic(f: HomogeneousPolynomial, r: int) -> BernsteinResult:
    """Quadratic shortcut: with Q the coefficient matrix of f = x^T Q x,

        B_r(f) = (1/r) * sum_i Q_ii x_i + (1 - 1/r) * f   on the simplex.
    """
    _require_order(r)
    if f.d != 2:
        raise ValueError(f"quadratic route needs degree 2, got degree {f.d}")
    acc: dict[MultiIndex, Fraction] = {}
    for i in range(f.n):
        q = f.coefficient(tuple(2 if k == i else 0 for k in range(f.n)))
        if q:
            acc[tuple(1 if k == i else 0 for k in range(f.n))] = q / r
    residual = 1 - Fraction(1, r)
    if residual:
        for beta, c in f.terms.items():
            acc[beta] = acc.get(beta, Fraction(0)) + residual * c
    reduced = GeneralPolynomial(f.n, acc)
    return BernsteinResult(homogeneous=None, reduced=reduced, r=r, source=SOURCE_QUADRATIC)


def bernstein_cubic(f: HomogeneousPolynomial, r: int) -> BernsteinResult:
    """Cubic shortcut.  Writing f with coefficients f_i on x_i^3, g_ij on
    x_i^2 x_j and f_ij on x_i x_j^2 (i < j), and f_ijk on x_i x_j x_k:

        B_r(f) = ((r-1)(r-2)/r^2) f
               + (1/r^2) [ sum_i f_i x_i
                           + (r-1) ( sum_i 3 f_i x_i^2
                                     + sum_{i<j} (f_ij + g_ij) x_i x_j ) ].
    """
    _require_order(r)
    if f.d != 3:
        raise ValueError(f"cubic route needs degree 3, got degree {f.d}")
    n = f.n
    rsq = r * r
    acc: dict[MultiIndex, Fraction] = {}

    def bump(key: MultiIndex, value: Fraction) -> None:
        if value:
            acc[key] = acc.get(key, Fraction(0)) + value

    lead = Fraction((r - 1) * (r - 2), rsq)
    for beta, c in f.terms.items():
        bump(beta, lead * c)
    for i in range(n):
        f_i = f.coefficient(tuple(3 if k == i else 0 for k in range(n)))
        if f_i:
            bump(tuple(1 if k == i else 0 for k in range(n)), Fraction(f_i, rsq))
            bump(tuple(2 if k == i else 0 for k in range(n)), Fraction(3 * (r - 1), rsq) * f_i)
    for i in range(n):
        for j in range(i + 1, n):
            g_ij = f.coefficient(tuple(2 if k == i else 1 if k == j else 0 for k in range(n)))
            f_ij = f.coefficient(tuple(1 if k == i else 2 if k == j else 0 for k in range(n)))
            mixed = f_ij + g_ij
            if mixed:
                key = tuple(1 if k in (i, j) else 0 for k in range(n))
                bump(key, Fraction(r - 1, rsq) * mixed)
    reduced = GeneralPolynomial(n, acc)
    return BernsteinResult(homogeneous=None, reduced=reduced, r=r, source=SOURCE_CUBIC)


def bernstein_squarefree(f: HomogeneousPolynomial, r: int) -> BernsteinResult:
    """Square-free shortcut: B_r(f) = (r^(d falling) / r^d) * f on the
    simplex, hence the zero polynomial whenever r < d."""
    _require_order(r)
    if not is_square_free(f):
        raise ValueError("square-free route needs a square-free polynomial")
    factor = Fraction(falling_factorial(r, f.d), r**f.d)
    reduced = GeneralPolynomial(f.n, {b: c * factor for b, c in f.terms.items()})
    return BernsteinResult(homogeneous=None, reduced=reduced, r=r, source=SOURCE_SQUAREFREE)


# ---------------------------------------------------------------------------
# Multinomial moments
# ---------------------------------------------------------------------------


def _check_simplex_point(n: int, x: Sequence[RationalLike]) -> list[Fraction]:
    point = [Fraction(v) for v in x]
    if len(point) != n:
        raise ValueError(f"point has dimension {len(point)}, expected {n}")
    if any(v < 0 for v in point) or sum(point) != 1:
        raise ValueError(f"point {x!r} is not on the standard simplex")
    return point


def _check_moment_order(n: int, beta: Sequence[int]) -> MultiIndex:
    order = tuple(beta)
    if len(order) != n:
        raise ValueError(f"moment order has dimension {len(order)}, expected {n}")
    if any(not isinstance(b, int) or b < 0 for b in order):
        raise ValueError(f"moment order must hold nonnegative integers: {order}")
    return order


@lru_cache(maxsize=4096)
def _probability_numerators(n: int, r: int, a: tuple[int, ...]) -> tuple[tuple[MultiIndex, int], ...]:
    """Integer numerators (over denominator sum(a)^r) of the multinomial
    probabilities (r!/alpha!) x^alpha for x = a / sum(a), dropping zeros."""
    rows = []
    for alpha in compositions(n, r):
        weight = multinomial(r, alpha)
        for a_i, count in zip(a, alpha):
            if count:
                if a_i == 0:
                    weight = 0
                    break
                weight *= a_i**count
        if weight:
            rows.append((alpha, weight))
    return tuple(rows)


def moment_direct(
    n: int, r: int, beta: Sequence[int], x: Sequence[RationalLike]
) -> Fraction:
    """Moment of order beta of the multinomial distribution with r trials and
    cell probabilities x, by full enumeration:

        sum over |alpha| = r of  alpha^beta * (r!/alpha!) * x^alpha.
    """
    _require_order(r)
    point = _check_simplex_point(n, x)
    beta = _check_moment_order(n, beta)
    xden = lcm(*(v.denominator for v in point))
    a = tuple(v.numerator * (xden // v.denominator) for v in point)
    total = 0
    for alpha, weight in _probability_numerators(n, r, a):
        for a_i, b_i in zip(alpha, beta):
            if b_i:
                if a_i == 0:
                    weight = 0
                    break
                weight *= a_i**b_i
        if weight:
            total += weight
    return Fraction(total, xden**r)


def moment_stirling(
    n: int, r: int, beta: Sequence[int], x: Sequence[RationalLike]
) -> Fraction:
    """Same moment via the Stirling closed form:

        sum over gamma <= beta of
            r^(|gamma| falling) * x^gamma * prod_i S(beta_i, gamma_i).
    """
    _require_order(r)
    point = _check_simplex_point(n, x)
    beta = _check_moment_order(n, beta)
    ranges = [range(1, b + 1) if b else range(0, 1) for b in beta]
    total = Fraction(0)
    for gamma in product(*ranges):
        sprod = 1
        for b_i, g_i in zip(beta, gamma):
            sprod *= stirling2(b_i, g_i)
        if not sprod:
            continue
        xpow = Fraction(1)
        for g_i, x_i in zip(gamma, point):
            if g_i:
                xpow *= x_i**g_i
        total += falling_factorial(r, sum(gamma)) * sprod * xpow
    return total


# ---------------------------------------------------------------------------
# Monte Carlo cross-check
# ---------------------------------------------------------------------------


def monte_carlo_bernstein(
    f: HomogeneousPolynomial,
    r: int,
    x: Sequence[float],
    samples: int,
    seed: int,
) -> tuple[float, float]:
    """Estimate B_r(f)(x) by simulating the r-step categorical walk whose
    endpoint counts are multinomial(r, x), and averaging f(counts/r).

    Returns (sample mean, standard error); the result is a deterministic
    function of (f, r, x, samples, seed).  This is the only floating-point
    surface of the module.
    """
    _require_order(r)
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    probs = np.asarray(list(x), dtype=float)
    if probs.shape != (f.n,):
        raise ValueError(f"point has dimension {probs.size}, expected {f.n}")
    if np.any(probs < 0) or abs(float(probs.sum()) - 1.0) > 1e-12:
        raise ValueError("invalid distribution: entries must be nonnegative and sum to 1")
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(r, probs / probs.sum(), size=samples)
    points = counts / float(r)
    values = np.zeros(samples, dtype=float)
    for beta, c in f.terms.items():
        term = np.full(samples, float(c))
        for i, e in enumerate(beta):
            if e:
                term = term * points[:, i] ** e
        values += term
    estimate = float(values.mean())
    stderr = float(values.std(ddof=1)) / sqrt(samples) if samples > 1 else 0.0
    return estimate, stderr
