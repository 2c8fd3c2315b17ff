"""Exact combinatorial kernels.

Falling factorials, Stirling numbers of the second kind, multinomial
coefficients, plus the two identities the general error-bound analysis rests
on, each paired with a brute-force oracle.  Everything here is arbitrary
precision integer arithmetic; nothing overflows silently.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, perm
from typing import Iterator, Sequence

# Exponent/count vector: element i is a nonnegative integer.  Tuples compare
# lexicographically, which is the canonical order used throughout.
MultiIndex = tuple[int, ...]


def compositions(n: int, r: int) -> Iterator[MultiIndex]:
    """Yield every nonnegative integer n-tuple summing to r, in ascending
    lexicographic order, starting at (0, ..., 0, r) and ending at (r, 0, ..., 0).
    """
    if n < 1:
        raise ValueError(f"need at least one slot, got n={n}")
    if r < 0:
        raise ValueError(f"total must be nonnegative, got r={r}")
    if n == 1:
        yield (r,)
        return
    cur = [0] * (n - 1) + [r]
    while True:
        yield tuple(cur)
        if not _next_composition(cur):
            return


def _next_composition(cur: list[int]) -> bool:
    """Advance ``cur`` to its lexicographic successor in place.

    Returns False when ``cur`` is already the last composition (all mass in
    the first slot).
    """
    n = len(cur)
    j = n - 1
    while j >= 0 and cur[j] == 0:
        j -= 1
    if j <= 0:
        return False
    moved = cur[j] - 1
    cur[j - 1] += 1
    cur[j] = 0
    cur[n - 1] = moved
    return True


def falling_factorial(r: int, d: int) -> int:
    """r·(r−1)···(r−d+1): 1 when d == 0, and 0 whenever d > r."""
    if r < 0 or d < 0:
        raise ValueError(f"arguments must be nonnegative, got ({r}, {d})")
    return perm(r, d)


# Stirling numbers of the second kind, built bottom-up via
# S(b+1, a) = S(b, a-1) + a*S(b, a), with S(0,0)=1, S(b,0)=0 for b>=1.
# Rows grow on demand; growth is serialized, lookups are read-only.
_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def _extend_stirling(b: int) -> None:
    with _stirling_lock:
        while len(_stirling_rows) <= b:
            m = len(_stirling_rows)
            prev = _stirling_rows[-1]
            row = [0] * (m + 1)
            for a in range(1, m + 1):
                below = prev[a] if a < len(prev) else 0
                row[a] = prev[a - 1] + a * below
            _stirling_rows.append(row)


def stirling2(b: int, a: int) -> int:
    """Number of partitions of a b-element set into a nonempty blocks."""
    if b < 0 or a < 0:
        raise ValueError(f"arguments must be nonnegative, got ({b}, {a})")
    if a > b:
        return 0
    _extend_stirling(b)
    return _stirling_rows[b][a]


@dataclass(frozen=True)
class StirlingTable:
    """Immutable triangular table of S(b, a) for 0 <= a <= b <= max_b."""

    max_b: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, max_b: int) -> "StirlingTable":
        if max_b < 0:
            raise ValueError(f"table extent must be nonnegative, got {max_b}")
        _extend_stirling(max_b)
        with _stirling_lock:
            rows = tuple(tuple(row) for row in _stirling_rows[: max_b + 1])
        return cls(max_b=max_b, rows=rows)

    def value(self, b: int, a: int) -> int:
        if b < 0 or b > self.max_b:
            raise ValueError(f"row {b} outside table extent {self.max_b}")
        if a < 0:
            raise ValueError(f"column must be nonnegative, got {a}")
        if a > b:
            return 0
        return self.rows[b][a]


def multinomial(r: int, alpha: Sequence[int]) -> int:
    """r! / (alpha_1! ··· alpha_n!) via incremental binomial products."""
    total = sum(alpha)
    if total != r:
        raise ValueError(f"multi-index sums to {total}, expected {r}")
    out = 1
    rem = r
    for a in alpha:
        if a < 0:
            raise ValueError(f"multi-index entries must be nonnegative, got {a}")
        out *= comb(rem, a)
        rem -= a
    return out


def surjection_count(d: int, k: int) -> int:
    """Count surjections from a d-element set onto a k-element set by
    exhaustively enumerating maps: every assignment of the first d-1 elements
    is walked, and the number of admissible images for the last element is
    read off directly (k when the prefix already covers everything, 1 when
    exactly one value is missing, 0 otherwise).

    Oracle-only: equals k!·S(d, k), and d is capped at 10 to keep the
    enumeration honest about its cost.
    """
    if d < 0 or k < 0:
        raise ValueError(f"arguments must be nonnegative, got ({d}, {k})")
    if d > 10:
        raise ValueError(f"brute-force surjection count capped at d <= 10, got {d}")
    if k == 0:
        return 1 if d == 0 else 0
    if d == 0:
        return 0
    count = 0
    for prefix in product(range(k), repeat=d - 1):
        covered = len(set(prefix))
        if covered == k:
            count += k
        elif covered == k - 1:
            count += 1
    return count


def falling_sum_sides(d: int, r: int) -> tuple[int, int]:
    """Both sides of: sum_{k=1}^{d-1} r^(k falling)·S(d,k) = r^d − r^(d falling)."""
    lhs = sum(falling_factorial(r, k) * stirling2(d, k) for k in range(1, d))
    rhs = r**d - falling_factorial(r, d)
    return lhs, rhs


def check_identity_falling_sum(d: int, r: int) -> bool:
    """Exact check of the falling-factorial/Stirling summation identity."""
    if d < 1 or r < 1:
        raise ValueError(f"need d >= 1 and r >= 1, got ({d}, {r})")
    lhs, rhs = falling_sum_sides(d, r)
    return lhs == rhs


def stirling_split_sides(alpha: Sequence[int], d: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Stirling splitting identity for alpha with |alpha|=k < d:

        S(d, k) = (alpha!/k!) * sum over beta with |beta|=d of
                  (d!/beta!) * prod_i S(beta_i, alpha_i)
    """
    alpha = tuple(alpha)
    k = sum(alpha)
    if d <= k:
        raise ValueError(f"need d > |alpha|, got d={d}, |alpha|={k}")
    n = len(alpha)
    lhs = Fraction(stirling2(d, k))
    total = 0
    for beta in compositions(n, d):
        p = 1
        for b_i, a_i in zip(beta, alpha):
            s = stirling2(b_i, a_i)
            if s == 0:
                p = 0
                break
            p *= s
        if p:
            total += multinomial(d, beta) * p
    alpha_fact = 1
    for a in alpha:
        alpha_fact *= factorial(a)
    rhs = Fraction(alpha_fact * total, factorial(k))
    return lhs, rhs


def check_identity_stirling_split(alpha: Sequence[int], d: int) -> bool:
    """Exact check of the Stirling splitting identity."""
    lhs, rhs = stirling_split_sides(alpha, d)
    return lhs == rhs
