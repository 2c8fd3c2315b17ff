"""Bernstein approximation by independent routes.

The order-r Bernstein approximation replaces f by a convex combination of its
values on the order-r grid.  This script computes it three ways -- the
degree-r definitional form, the Stirling-number closed form, and the
degree-specialized shortcuts -- and checks they agree exactly on the simplex.
"""

from fractions import Fraction
from random import Random

from simplexopt import (
    bernstein_closed_form,
    bernstein_cubic,
    bernstein_definitional,
    bernstein_quadratic,
    equal_on_simplex,
    evaluate,
    format_polynomial,
    parse_polynomial,
    sample_grid_points,
)

f = parse_polynomial("2*x1^2 + x2^2 - 5*x1*x2", 2)

# Route 1: definitional.  A degree-2 homogeneous polynomial whose
# coefficient at x^alpha is f(alpha/2) * 2!/alpha!.
definitional = bernstein_definitional(f, 2).homogeneous
print("definitional form: ", format_polynomial(definitional))

# Route 2: the quadratic shortcut gives the reduced (simplex) form directly:
# (1/r) * sum_i Q_ii x_i + (1 - 1/r) * f.
reduced = bernstein_quadratic(f, 2).reduced
print("reduced form:      ", format_polynomial(reduced))

# Route 3: the general closed form through falling factorials and Stirling
# numbers lands on the identical term map.
closed = bernstein_closed_form(f, 2).reduced
print("closed-form match: ", closed.terms == reduced.terms)

# The degree-2 and degree-<=2 forms are different polynomials of different
# degrees, but they agree at every point of the simplex.
print("equal on simplex:  ", equal_on_simplex(definitional, reduced))

rng = Random(0)
checks = all(
    evaluate(definitional, x) == evaluate(reduced, x)
    for x in sample_grid_points(2, 25, rng)
)
print("25 sampled points agree exactly:", checks)

# The smoothing never reaches below the grid minimum, and it interpolates f
# at the vertices.
print("\nvalue at (3/8, 5/8):", evaluate(reduced, [Fraction(3, 8), Fraction(5, 8)]))
print("value at vertex e1: ", evaluate(reduced, [Fraction(1), Fraction(0)]),
      "= f(e1) =", evaluate(f, [Fraction(1), Fraction(0)]))

# A cubic with a tidy reduced form: on the simplex the approximation of
# x1^3 + x2^3 collapses to 1 + (3/r - 3) x1 x2.
cubic = parse_polynomial("x1^3 + x2^3", 2)
for r in (2, 3, 10):
    form = bernstein_cubic(cubic, r).reduced
    at_center = evaluate(form, [Fraction(1, 2), Fraction(1, 2)])
    print(f"r={r:2d}: B_r(x1^3+x2^3) at center = {at_center}")
