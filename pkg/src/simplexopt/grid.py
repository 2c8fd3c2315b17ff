"""Regular grids on the standard simplex.

The order-r grid consists of the points alpha/r where alpha ranges over all
nonnegative integer n-vectors summing to r.  This module enumerates those
index vectors in lexicographic order, ranks/unranks them (combinatorial
number system) so iteration can be partitioned into disjoint contiguous
ranges, and scans them for exact extrema with a deterministic lexicographic
tie-break.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from random import Random
from typing import Callable, Iterator

from .combinatorics import MultiIndex, _next_composition, compositions
from .polynomial import HomogeneousPolynomial, Polynomial


@dataclass(frozen=True)
class GridPoint:
    """The rational simplex point alpha/r, held as the integer vector alpha
    and the grid order r."""

    alpha: MultiIndex
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"grid order must be >= 1, got {self.r}")
        if any(not isinstance(a, int) or a < 0 for a in self.alpha):
            raise ValueError(f"index vector must hold nonnegative integers: {self.alpha}")
        if sum(self.alpha) != self.r:
            raise ValueError(f"index vector {self.alpha} must sum to {self.r}")

    def coordinates(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.r) for a in self.alpha)


@dataclass(frozen=True)
class GridMinimum:
    """Result of a full grid scan: the extremal value, the witness point
    (lexicographically smallest index among ties), and how many grid points
    were evaluated."""

    value: Fraction
    argmin: GridPoint
    evaluations: int


def enumerate_grid(n: int, r: int) -> Iterator[MultiIndex]:
    """Yield every index vector of the order-r grid in n variables exactly
    once, in ascending lexicographic order."""
    return compositions(n, r)


def grid_size(n: int, r: int) -> int:
    """Number of order-r grid points in n variables: C(n+r-1, r)."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if r < 0:
        raise ValueError(f"order must be >= 0, got {r}")
    return comb(n + r - 1, r)


def composition_rank(alpha: MultiIndex) -> int:
    """Position of alpha within the lexicographic enumeration of all
    vectors with its length and total."""
    n = len(alpha)
    rank = 0
    remaining = sum(alpha)
    for i in range(n - 1):
        slots = n - 1 - i
        for v in range(alpha[i]):
            rank += comb(slots + remaining - v - 1, slots - 1)
        remaining -= alpha[i]
    return rank


def composition_unrank(n: int, r: int, rank: int) -> MultiIndex:
    """Inverse of composition_rank: the rank-th vector in lexicographic
    order among nonnegative n-vectors summing to r."""
    total = grid_size(n, r)
    if rank < 0 or rank >= total:
        raise ValueError(f"rank {rank} outside [0, {total})")
    out = []
    remaining = r
    for i in range(n - 1):
        slots = n - 1 - i
        v = 0
        while True:
            count = comb(slots + remaining - v - 1, slots - 1)
            if rank < count:
                break
            rank -= count
            v += 1
        out.append(v)
        remaining -= v
    out.append(remaining)
    return tuple(out)


def iter_grid_range(n: int, r: int, start: int, stop: int) -> Iterator[MultiIndex]:
    """Yield the grid index vectors with ranks start <= rank < stop, in
    order.  Disjoint ranges cover the grid without overlap, which is what
    makes partitioned parallel scans deterministic."""
    total = grid_size(n, r)
    if not (0 <= start <= stop <= total):
        raise ValueError(f"invalid range [{start}, {stop}) for grid of size {total}")
    if start == stop:
        return
    cur = list(composition_unrank(n, r, start))
    for _ in range(stop - start):
        yield tuple(cur)
        if not _next_composition(cur):
            break


# ---------------------------------------------------------------------------
# Exact extrema
# ---------------------------------------------------------------------------


def _integer_numerator(f: Polynomial, r: int) -> tuple[Callable[[MultiIndex], int], int]:
    """Compile f into an integer numerator function over grid index vectors.

    At the grid point alpha/r the value of f is num(alpha) / denom with the
    fixed positive denominator returned alongside, so value comparisons
    reduce to integer comparisons.
    """
    dmax = f.d if isinstance(f, HomogeneousPolynomial) else f.degree()
    cden = lcm(*(c.denominator for c in f.terms.values())) if f.terms else 1
    compiled = []
    for beta, c in f.terms.items():
        pairs = tuple((i, e) for i, e in enumerate(beta) if e)
        deficit = dmax - sum(e for _, e in pairs)
        compiled.append((c.numerator * (cden // c.denominator) * r**deficit, pairs))

    def num(alpha: MultiIndex) -> int:
        total = 0
        for const, pairs in compiled:
            prod = const
            for i, e in pairs:
                base = alpha[i]
                if base == 0:
                    prod = 0
                    break
                prod *= base if e == 1 else base**e
            if prod:
                total += prod
        return total

    return num, cden * r**dmax


def _scan_extremum(
    f: Polynomial, r: int, prefer_smaller: bool, threads: int | None
) -> GridMinimum:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"grid order must be an integer >= 1, got {r!r}")
    n = f.n
    num, denom = _integer_numerator(f, r)
    total = grid_size(n, r)

    def scan(indices: Iterator[MultiIndex]) -> tuple[int, MultiIndex]:
        best_v: int | None = None
        best_a: MultiIndex = ()
        for alpha in indices:
            v = num(alpha)
            if best_v is None or (v < best_v if prefer_smaller else v > best_v):
                best_v, best_a = v, alpha
        assert best_v is not None
        return best_v, best_a

    workers = threads or 1
    if workers <= 1 or total < 2 * workers:
        best_v, best_a = scan(enumerate_grid(n, r))
    else:
        bounds = [total * k // workers for k in range(workers + 1)]
        chunks = [(bounds[k], bounds[k + 1]) for k in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda span: scan(iter_grid_range(n, r, span[0], span[1])), chunks)
            )
        # Merge in chunk order: a strict improvement is required to displace
        # an earlier chunk's witness, so the lexicographically smallest index
        # wins ties regardless of scheduling.
        best_v, best_a = results[0]
        for v, a in results[1:]:
            if v < best_v if prefer_smaller else v > best_v:
                best_v, best_a = v, a
    return GridMinimum(Fraction(best_v, denom), GridPoint(best_a, r), total)


def grid_minimize(f: Polynomial, r: int, threads: int | None = None) -> GridMinimum:
    """Exact minimum of f over the order-r grid.

    Ties break to the lexicographically smallest index vector; partitioned
    parallel scans return the identical (value, argmin) pair as the
    sequential scan.
    """
    return _scan_extremum(f, r, prefer_smaller=True, threads=threads)


def grid_maximize(f: Polynomial, r: int, threads: int | None = None) -> GridMinimum:
    """Exact maximum of f over the order-r grid, same contract as
    grid_minimize (argmin field holds the maximizing point)."""
    return _scan_extremum(f, r, prefer_smaller=False, threads=threads)


def sum_of_powers_grid_min(n: int, r: int, d: int) -> Fraction:
    """Closed-form grid minimum of x_1^d + ... + x_n^d.

    Writing r = k*n + s with 0 <= s < n, the minimum over the order-r grid is
    attained by any point with s coordinates (k+1)/r and n-s coordinates k/r:

        s*((k+1)/r)^d + (n-s)*(k/r)^d

    Serves as an independent oracle for grid_minimize on this family.
    """
    if n < 1 or r < 1 or d < 1:
        raise ValueError(f"need n, r, d >= 1, got ({n}, {r}, {d})")
    k, s = divmod(r, n)
    return s * Fraction(k + 1, r) ** d + (n - s) * Fraction(k, r) ** d


def sample_grid_points(
    n: int, count: int, rng: Random, order: int = 37
) -> list[tuple[Fraction, ...]]:
    """Draw `count` uniform points from the order-`order` grid (default 37, a
    prime, so sampled points rarely align with the small grids under test).
    Exact rational coordinates; duplicates possible."""
    total = grid_size(n, order)
    points = []
    for _ in range(count):
        alpha = composition_unrank(n, order, rng.randrange(total))
        points.append(tuple(Fraction(a, order) for a in alpha))
    return points
