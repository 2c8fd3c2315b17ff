"""Choosing the grid order from a target accuracy.

Inverting each bound family in r gives the smallest grid order whose relative
error factor meets a requested accuracy.  For fixed degree the grid size is
polynomial in n, so the whole pipeline -- pick r, scan the grid, certify --
is an implementable approximation scheme.
"""

from fractions import Fraction

from simplexopt import (
    grid_size,
    min_grid_order,
    parse_polynomial,
    ptas_approximate,
)

# How the required order grows as the accuracy tightens, per bound family.
print("epsilon      quadratic   cubic   squarefree(d=3)   general(d=3)")
for eps in (Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 10), Fraction(1, 50)):
    row = [
        min_grid_order(2, eps, "quadratic"),
        min_grid_order(3, eps, "cubic"),
        min_grid_order(3, eps, "squarefree"),
        min_grid_order(3, eps, "general"),
    ]
    print(f"{str(eps):10}   {row[0]:9}   {row[1]:5}   {row[2]:15}   {row[3]:12}")

# End to end: a target accuracy of 1/3 for the squared-norm polynomial picks
# r=3, and the returned grid point is certified within epsilon of the range.
f = parse_polynomial("x1^2 + x2^2", 2)
point, value, cert = ptas_approximate(f, Fraction(1, 3))
print(f"\ntarget 1/3 on x1^2+x2^2: family={cert.theorem}, r={cert.r}, "
      f"point alpha={point.alpha}, value={value}")
print(f"grid size used: {grid_size(2, cert.r)} points; satisfied={cert.satisfied}")

# Square-free inputs win the sharpest family automatically.
g = parse_polynomial("-x1*x2", 2)
point, value, cert = ptas_approximate(g, Fraction(1, 2))
print(f"target 1/2 on -x1*x2:  family={cert.theorem}, r={cert.r}, value={value}")

# With an exact range the accuracy guarantee itself is checkable:
# value - min <= epsilon * (max - min).
from simplexopt import exact_range

epsilon = Fraction(1, 5)
point, value, cert = ptas_approximate(g, epsilon, exact_range(Fraction(-1, 4), 0))
guarantee = value - Fraction(-1, 4) <= epsilon * Fraction(1, 4)
print(f"target 1/5 with exact range: r={cert.r}, value={value}, "
      f"guarantee holds: {guarantee}")
