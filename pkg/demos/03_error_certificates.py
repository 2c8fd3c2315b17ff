"""Machine-checkable error-bound certificates.

Each bound family relates the grid minimum to the true minimum through the
range of f.  With a caller-supplied exact range the certificate checks the
bound theorem itself; with a certified surrogate range (the Bernstein-basis
coefficient bounds) it checks the widened inequality the surrogate provably
supports, and records the provenance either way.
"""

import json
from fractions import Fraction

from simplexopt import (
    bound_cubic,
    bound_general,
    bound_quadratic,
    bound_squarefree,
    coefficient_range,
    exact_range,
    parse_polynomial,
)

# Square-free example with known extrema: min -1/4 (at the center), max 0.
f = parse_polynomial("-x1*x2", 2)
cert = bound_squarefree(f, 3, exact_range(Fraction(-1, 4), 0))
print("square-free, exact range, r=3:")
print(json.dumps(cert.to_json_dict(), indent=2, sort_keys=True))

# The same certificate with the coefficient-range surrogate: lower = -1/2 is
# certified but looser, so the recorded bound widens and the ratio is absent.
relaxed = bound_squarefree(f, 3, coefficient_range(f))
print("\nsquare-free, coefficient-range surrogate:")
print(json.dumps(relaxed.to_json_dict(), indent=2, sort_keys=True))

# Quadratic family: the bound uses the largest diagonal coefficient.
g = parse_polynomial("x1^2 + x2^2", 2)
for r in (2, 3, 6):
    c = bound_quadratic(g, r, exact_range(Fraction(1, 2), 1))
    print(f"\nquadratic r={r}: gap {c.gap} <= bound {c.bound_value} "
          f"(ratio {c.ratio}, satisfied={c.satisfied})")

# Cubic family: factor 4/r - 4/r^2 on the range span.
h = parse_polynomial("x1^3 + x2^3", 2)
c = bound_cubic(h, 3, exact_range(Fraction(1, 4), 1))
print(f"\ncubic r=3: gap {c.gap} <= bound {c.bound_value}")

# General degree: two certificates, the coefficient-range leg and the
# constant-scaled range leg, both against the same grid run.
constant_leg, coefficient_leg = bound_general(h, 3, exact_range(Fraction(1, 4), 1))
print(f"general r=3: constant leg bound {constant_leg.bound_value}, "
      f"coefficient leg bound {coefficient_leg.bound_value}")
