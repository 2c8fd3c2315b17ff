"""Exact minimization of homogeneous polynomials over the standard simplex.

The library evaluates polynomials on regular simplex grids in exact rational
arithmetic, computes Bernstein approximations by independent routes, and
emits machine-checkable certificates for the grid-vs-true-minimum error
bounds, including the accuracy-driven choice of grid order.
"""

from .bernstein import (
    BernsteinResult,
    bernstein_closed_form,
    bernstein_cubic,
    bernstein_definitional,
    bernstein_quadratic,
    bernstein_squarefree,
    moment_direct,
    moment_stirling,
    monte_carlo_bernstein,
)
from .bounds import (
    BoundCertificate,
    RangeInput,
    bernstein_excess_on_grid,
    bound_cubic,
    bound_general,
    bound_quadratic,
    bound_squarefree,
    brute_force_stable_set_number,
    coefficient_range,
    exact_range,
    grid_range,
    min_grid_order,
    ptas_approximate,
    stable_set_bounds,
)
from .combinatorics import (
    MultiIndex,
    StirlingTable,
    check_identity_falling_sum,
    check_identity_stirling_split,
    compositions,
    falling_factorial,
    multinomial,
    stirling2,
    surjection_count,
)
from .grid import (
    GridMinimum,
    GridPoint,
    composition_rank,
    composition_unrank,
    enumerate_grid,
    grid_maximize,
    grid_minimize,
    grid_size,
    iter_grid_range,
    sample_grid_points,
    sum_of_powers_grid_min,
)
from .polynomial import (
    GeneralPolynomial,
    HomogeneousPolynomial,
    ParseError,
    add,
    bernstein_coefficients,
    coefficient_range_bounds,
    equal_on_simplex,
    evaluate,
    format_polynomial,
    is_square_free,
    motzkin_straus,
    parse_graph,
    parse_polynomial,
    ptas_constant,
    scale,
)
from .selftest import run_selftest

__all__ = [
    "BernsteinResult",
    "BoundCertificate",
    "GeneralPolynomial",
    "GridMinimum",
    "GridPoint",
    "HomogeneousPolynomial",
    "MultiIndex",
    "ParseError",
    "RangeInput",
    "StirlingTable",
    "add",
    "bernstein_closed_form",
    "bernstein_coefficients",
    "bernstein_cubic",
    "bernstein_definitional",
    "bernstein_excess_on_grid",
    "bernstein_quadratic",
    "bernstein_squarefree",
    "bound_cubic",
    "bound_general",
    "bound_quadratic",
    "bound_squarefree",
    "brute_force_stable_set_number",
    "check_identity_falling_sum",
    "check_identity_stirling_split",
    "coefficient_range",
    "coefficient_range_bounds",
    "composition_rank",
    "composition_unrank",
    "compositions",
    "enumerate_grid",
    "equal_on_simplex",
    "evaluate",
    "exact_range",
    "falling_factorial",
    "format_polynomial",
    "grid_maximize",
    "grid_minimize",
    "grid_range",
    "grid_size",
    "is_square_free",
    "iter_grid_range",
    "min_grid_order",
    "moment_direct",
    "moment_stirling",
    "monte_carlo_bernstein",
    "motzkin_straus",
    "multinomial",
    "parse_graph",
    "parse_polynomial",
    "ptas_approximate",
    "ptas_constant",
    "run_selftest",
    "sample_grid_points",
    "scale",
    "stable_set_bounds",
    "stirling2",
    "sum_of_powers_grid_min",
    "surjection_count",
]

__version__ = "0.1.0"
