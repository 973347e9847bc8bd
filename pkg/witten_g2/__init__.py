"""witten_g2: Exact and numerical values of the G₂ Witten zeta function.

witten_g2 computes the double zeta function attached to the root system
G₂, both as exact rational multiples of powers of π at even arguments and
as numerically summed double series with rigorous error bounds.

Key Features:
- Generalized Bernoulli coefficients from the G₂ generating function, by two independent algorithms
- Exact values ζ₂(k) at orbit tuples and Witten volume constants
- Numeric summation with tail bounds, twisted by rational characters
- Functional relations with Riemann zeta values, checked exactly and numerically
- Exact singular-locus predicate and a JSON command line
"""

from .generating import bernoulli_coefficient, weyl_sum_exact, witten_volume_constant, zeta2_exact  # noqa: F401
from .numeric import weyl_sum_numeric, witten_numeric, zeta2_numeric  # noqa: F401
from .relations import check_relation, reduce_even, singular_locus_check  # noqa: F401
