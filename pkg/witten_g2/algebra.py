"""Exact arithmetic used by every other module.

This module provides the rational building blocks of the engine:

Classes:
    PiValue: A Gaussian-rational multiple of a power of π
    PiPolynomial: A sum of PiValues graded by the power of π
    LinearForm: A homogeneous linear form in the six series variables
    SparseLaurentSeries: A truncated Laurent series in six variables over the rationals
    ConsistencyError: Base class of internal consistency failures
    DivisibilityError: Raised when a long division leaves a remainder

Features:
    - Bernoulli numbers and polynomials with the B₁ = −1/2 convention
    - Exact ζ(m) and φ(m) at even m as PiValues, with ζ(0) = φ(0) = −1/2
    - Series arithmetic with per-variable bounds and a total degree cap; pruning is flagged, never an error
    - Exact division by a linear form and ordered Laurent expansion of 1/L
"""

import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd, lcm

import mpmath as mp

from witten_g2.util import GradedMapping

logger = logging.getLogger("witten_g2.algebra")

NVARS = 6

PI_50 = "3.14159265358979323846264338327950288419716939937510"

_BERNOULLI_CACHE = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


class ConsistencyError(ArithmeticError):
    """An internal invariant of the exact pipeline was violated."""


class DivisibilityError(ConsistencyError):
    """Long division by a linear form left a non-zero remainder."""


def bernoulli_number(n):
    """Return the Bernoulli number Bₙ with B₁ = −1/2.

    Uses the recurrence Σ_{j=0}^{n} C(n+1, j)·B_j = 0 and memoizes every
    value computed so far.

    Args:
        n (int): Index, n ≥ 0.

    Returns:
        Fraction: Bₙ.

    Raises:
        ValueError: If n is negative.

    Examples:
        >>> bernoulli_number(1)
        Fraction(-1, 2)
        >>> bernoulli_number(12)
        Fraction(-691, 2730)
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n < len(_BERNOULLI_CACHE):
        return _BERNOULLI_CACHE[n]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI_CACHE) <= n:
            m = len(_BERNOULLI_CACHE)
            if m > 1 and m % 2 == 1:
                _BERNOULLI_CACHE.append(Fraction(0))
                continue
            total = sum(comb(m + 1, j) * _BERNOULLI_CACHE[j] for j in range(m))
            _BERNOULLI_CACHE.append(-Fraction(total) / (m + 1))
        return _BERNOULLI_CACHE[n]


def bernoulli_polynomial(n, x):
    """Return Bₙ(x) = Σ_j C(n, j)·B_j·x^{n−j} at a rational x."""
    x = Fraction(x)
    return sum((comb(n, j) * bernoulli_number(j) * x ** (n - j) for j in range(n + 1)), Fraction(0))


def binomial(n, k):
    """Binomial coefficient that is zero whenever n < 0, k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def fractional_part(x):
    """Return {x} = x − ⌊x⌋ for a rational x."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def _gaussian_mul(left, right):
    return (left[0] * right[0] - left[1] * right[1], left[0] * right[1] + left[1] * right[0])


def _pi_decimal(real, imag, pi_power, dps):
    with mp.workdps(dps + 10):
        weight = mp.mpf(PI_50) ** pi_power
        if imag == 0:
            value = mp.mpf(real.numerator) / real.denominator * weight
        else:
            value = mp.mpc(
                mp.mpf(real.numerator) / real.denominator,
                mp.mpf(imag.numerator) / imag.denominator,
            ) * weight
    return value


@dataclass(frozen=True)
class PiValue:
    """The exact value (real + i·imag)·π^pi_power.

    Attributes:
        real (Fraction): Real part of the coefficient.
        imag (Fraction): Imaginary part of the coefficient.
        pi_power (int): Non-negative power of π.
    """

    real: Fraction
    imag: Fraction = Fraction(0)
    pi_power: int = 0

    def __post_init__(self):
        if self.pi_power < 0:
            raise ValueError(f"pi_power must be >= 0, got {self.pi_power}")
        object.__setattr__(self, "real", Fraction(self.real))
        object.__setattr__(self, "imag", Fraction(self.imag))

    @classmethod
    def i(cls):
        """The imaginary unit as a PiValue."""
        return cls(Fraction(0), Fraction(1), 0)

    @property
    def coefficient(self):
        return (self.real, self.imag)

    def is_zero(self):
        return self.real == 0 and self.imag == 0

    def is_real(self):
        return self.imag == 0

    def scale(self, factor):
        factor = Fraction(factor)
        return PiValue(self.real * factor, self.imag * factor, self.pi_power)

    def __neg__(self):
        return PiValue(-self.real, -self.imag, self.pi_power)

    def __add__(self, other):
        if isinstance(other, PiValue) and other.pi_power == self.pi_power:
            return PiValue(self.real + other.real, self.imag + other.imag, self.pi_power)
        if isinstance(other, int) and other == 0:
            return self
        return PiPolynomial.from_value(self) + other

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PiValue):
            real, imag = _gaussian_mul(self.coefficient, other.coefficient)
            return PiValue(real, imag, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, PiPolynomial):
            return PiPolynomial.from_value(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def to_decimal(self, dps=30):
        """Evaluate with the stored 50-digit π at ``dps`` working digits."""
        return _pi_decimal(self.real, self.imag, self.pi_power, dps)

    def __str__(self):
        if self.imag == 0:
            coefficient = str(self.real)
        else:
            coefficient = f"({self.real}{'+' if self.imag >= 0 else '-'}{abs(self.imag)}i)"
        return coefficient if self.pi_power == 0 else f"{coefficient}*pi^{self.pi_power}"


class PiPolynomial(GradedMapping):
    """A polynomial in π over the Gaussian rationals.

    Maps each power of π to a ``(real, imag)`` pair of Fractions. Zero
    coefficients are never stored, so equality is exact equality of values.
    """

    ZERO = (Fraction(0), Fraction(0))

    def __init__(self, mapping=None):
        super().__init__(
            {power: (Fraction(c[0]), Fraction(c[1])) for power, c in dict(mapping or {}).items()},
            zero=self.ZERO,
        )

    @classmethod
    def from_value(cls, value):
        return cls({value.pi_power: value.coefficient})

    @classmethod
    def from_rational(cls, value):
        return cls({0: (Fraction(value), Fraction(0))})

    def _coerce(self, other):
        if isinstance(other, PiPolynomial):
            return other
        if isinstance(other, PiValue):
            return PiPolynomial.from_value(other)
        if isinstance(other, (int, Fraction)):
            return PiPolynomial.from_rational(other)
        raise TypeError(f"Cannot combine PiPolynomial with {type(other)}")

    def __add__(self, other):
        other = self._coerce(other)
        result = PiPolynomial(self.data)
        for power, (real, imag) in other.items():
            current = result.get(power, self.ZERO)
            result[power] = (current[0] + real, current[1] + imag)
        return result

    __radd__ = __add__

    def __neg__(self):
        return PiPolynomial({power: (-c[0], -c[1]) for power, c in self.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        result = PiPolynomial()
        for left_power, left in self.items():
            for right_power, right in other.items():
                real, imag = _gaussian_mul(left, right)
                current = result.get(left_power + right_power, self.ZERO)
                result[left_power + right_power] = (current[0] + real, current[1] + imag)
        return result

    __rmul__ = __mul__

    def scale(self, factor):
        factor = Fraction(factor)
        return PiPolynomial({power: (c[0] * factor, c[1] * factor) for power, c in self.items()})

    def __eq__(self, other):
        if isinstance(other, (PiValue, int, Fraction)):
            other = self._coerce(other)
        return super().__eq__(other)

    __hash__ = None

    def is_zero(self):
        return len(self) == 0

    def terms(self):
        """Return the non-zero terms as PiValues in increasing π-power."""
        return [PiValue(c[0], c[1], power) for power, c in self.items()]

    def as_value(self):
        """Return the single PiValue this polynomial holds.

        Raises:
            ValueError: If more than one power of π is present.
        """
        if len(self) == 0:
            return PiValue(Fraction(0))
        if len(self) > 1:
            raise ValueError(f"Expected a single power of pi, got powers {self.grades()}")
        return self.terms()[0]

    def to_decimal(self, dps=30):
        with mp.workdps(dps + 10):
            return mp.fsum(term.to_decimal(dps) for term in self.terms())


def zeta_even_exact(m):
    """Return ζ(m) at an even m ≥ 0 as a PiValue.

    For m ≥ 2 this is (−1)^{m/2+1}·B_m·(2π)^m / (2·m!). At m = 0 the
    analytic continuation value −1/2 is returned.

    Raises:
        ValueError: If m is odd or negative.

    Examples:
        >>> zeta_even_exact(2)
        PiValue(real=Fraction(1, 6), imag=Fraction(0, 1), pi_power=2)
    """
    if m < 0 or m % 2:
        raise ValueError(f"m must be a non-negative even integer, got {m}")
    if m == 0:
        return PiValue(Fraction(-1, 2))
    sign = 1 if (m // 2) % 2 == 1 else -1
    return PiValue(sign * bernoulli_number(m) * 2**m / (2 * factorial(m)), Fraction(0), m)


def phi_even_exact(m):
    """Return φ(m) = (2^{1−m} − 1)·ζ(m) at an even m ≥ 0."""
    return zeta_even_exact(m).scale(Fraction(2) ** (1 - m) - 1)


@dataclass(frozen=True)
class LinearForm:
    """A homogeneous linear form Σ a_j·t_j in the six series variables.

    Variables are numbered 1 to 6. Use :meth:`normalized` for the primitive
    integer representative used to deduplicate forms.
    """

    coefficients: tuple

    def __post_init__(self):
        coefficients = tuple(Fraction(c) for c in self.coefficients)
        if len(coefficients) != NVARS:
            raise ValueError(f"A linear form needs {NVARS} coefficients, got {len(coefficients)}")
        if not any(coefficients):
            raise ValueError("A linear form must not be identically zero")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_terms(cls, terms):
        """Build a form from a ``{variable: coefficient}`` mapping."""
        coefficients = [Fraction(0)] * NVARS
        for variable, value in terms.items():
            if not 1 <= variable <= NVARS:
                raise ValueError(f"Variable index must be in 1..{NVARS}, got {variable}")
            coefficients[variable - 1] += Fraction(value)
        return cls(tuple(coefficients))

    def coefficient(self, variable):
        return self.coefficients[variable - 1]

    def variables(self):
        return [j + 1 for j, c in enumerate(self.coefficients) if c != 0]

    def normalized(self):
        """Return ``(scalar, form)`` with ``self == scalar·form`` and ``form`` primitive.

        The normalized form has coprime integer coefficients and a positive
        first non-zero coefficient.
        """
        denominator = lcm(*(c.denominator for c in self.coefficients))
        integers = [int(c * denominator) for c in self.coefficients]
        divisor = gcd(*integers)
        leading = next(value for value in integers if value != 0)
        if leading < 0:
            divisor = -divisor
        primitive = LinearForm(tuple(Fraction(value, divisor) for value in integers))
        return Fraction(divisor, denominator), primitive

    def as_series(self):
        return SparseLaurentSeries(
            {_unit(variable): c for variable, c in zip(range(1, NVARS + 1), self.coefficients) if c != 0}
        )

    def __str__(self):
        parts = []
        for variable, c in zip(range(1, NVARS + 1), self.coefficients):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            body = f"t{variable}" if magnitude == 1 else f"{magnitude}*t{variable}"
            parts.append(f"{sign}{body}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _unit(variable, power=1):
    exponents = [0] * NVARS
    exponents[variable - 1] = power
    return tuple(exponents)


def _merge_bounds(left, right):
    merged = []
    for (left_lo, left_hi), (right_lo, right_hi) in zip(left, right):
        lo = left_lo if right_lo is None else (right_lo if left_lo is None else max(left_lo, right_lo))
        hi = left_hi if right_hi is None else (right_hi if left_hi is None else min(left_hi, right_hi))
        merged.append((lo, hi))
    return tuple(merged)


def _merge_cap(left, right):
    if left is None:
        return right
    if right is None:
        return left
    return min(left, right)


UNBOUNDED = ((None, None),) * NVARS


def make_bounds(bounds=None):
    """Expand a ``{variable: (lo, hi)}`` mapping into a full bounds tuple."""
    result = list(UNBOUNDED)
    for variable, (lo, hi) in (bounds or {}).items():
        result[variable - 1] = (lo, hi)
    return tuple(result)


class SparseLaurentSeries:
    """A truncated Laurent series in six variables with rational coefficients.

    Terms are stored per total degree, each layer a dict from exponent
    tuples to non-zero Fractions. Every stored exponent satisfies the
    per-variable bounds and the total degree cap. Arithmetic prunes terms that
    fall outside them and records this in :attr:`truncated`.

    Args:
        terms (dict, optional): Mapping from 6-tuples of integers to rationals.
        degree_cap (int, optional): Largest total degree kept. ``None`` means no cap.
        bounds (tuple, optional): Six ``(lo, hi)`` pairs, ``None`` meaning unbounded.
        truncated (bool): Whether pruning already happened upstream.
    """

    def __init__(self, terms=None, degree_cap=None, bounds=None, truncated=False):
        self.degree_cap = degree_cap
        self.bounds = bounds if bounds is not None else UNBOUNDED
        self.truncated = truncated
        self._layers = GradedMapping(zero={})
        for exponents, value in (terms or {}).items():
            self._accumulate(tuple(exponents), Fraction(value))

    def _admits(self, exponents):
        if self.degree_cap is not None and sum(exponents) > self.degree_cap:
            return False
        for e, (lo, hi) in zip(exponents, self.bounds):
            if (lo is not None and e < lo) or (hi is not None and e > hi):
                return False
        return True

    def _accumulate(self, exponents, value):
        if len(exponents) != NVARS:
            raise ValueError(f"Exponent vectors need {NVARS} entries, got {exponents}")
        if value == 0:
            return
        if not self._admits(exponents):
            self.truncated = True
            return
        degree = sum(exponents)
        layer = self._layers.get(degree)
        if layer is None:
            layer = {}
        total = layer.get(exponents, 0) + value
        if total == 0:
            layer.pop(exponents, None)
        else:
            layer[exponents] = total
        self._layers[degree] = layer

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        return cls({tuple(exponents): coefficient})

    @classmethod
    def one(cls):
        return cls.monomial((0,) * NVARS)

    @classmethod
    def variable(cls, variable):
        return cls.monomial(_unit(variable))

    def items(self):
        for degree in self._layers:
            yield from sorted(self._layers[degree].items())

    @property
    def terms(self):
        return dict(self.items())

    def coefficient(self, exponents):
        exponents = tuple(exponents)
        return self._layers.get(sum(exponents), {}).get(exponents, Fraction(0))

    def degrees(self):
        return self._layers.grades()

    def homogeneous_part(self, degree):
        """Return the layer of the given total degree as a new series."""
        return SparseLaurentSeries(
            dict(self._layers.get(degree, {})), self.degree_cap, self.bounds, self.truncated
        )

    def restrict(self, bounds=None, degree_cap=None):
        """Return a copy restricted to tighter bounds or a lower degree cap."""
        merged_bounds = _merge_bounds(self.bounds, bounds or UNBOUNDED)
        return SparseLaurentSeries(
            self.terms, _merge_cap(self.degree_cap, degree_cap), merged_bounds, self.truncated
        )

    def shift(self, variable, power=1):
        """Multiply by t_variable^power; the bounds and cap move along."""
        step = _unit(variable, power)
        bounds = list(self.bounds)
        lo, hi = bounds[variable - 1]
        bounds[variable - 1] = (None if lo is None else lo + power, None if hi is None else hi + power)
        return SparseLaurentSeries(
            {tuple(e + s for e, s in zip(exponents, step)): c for exponents, c in self.items()},
            None if self.degree_cap is None else self.degree_cap + power,
            tuple(bounds),
            self.truncated,
        )

    def scale(self, factor):
        factor = Fraction(factor)
        if factor == 0:
            return SparseLaurentSeries(None, self.degree_cap, self.bounds, self.truncated)
        return SparseLaurentSeries(
            {exponents: c * factor for exponents, c in self.items()}, self.degree_cap, self.bounds, self.truncated
        )

    def __len__(self):
        return sum(len(layer) for layer in self._layers.values())

    def __bool__(self):
        return len(self._layers) > 0

    def __eq__(self, other):
        if not isinstance(other, SparseLaurentSeries):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, -other)

    def __mul__(self, other):
        if isinstance(other, SparseLaurentSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"SparseLaurentSeries({self.terms!r}, degree_cap={self.degree_cap!r})"


def series_add(a, b):
    """Sum of two series, valid on the intersection of their bounds and caps."""
    result = SparseLaurentSeries(
        None,
        _merge_cap(a.degree_cap, b.degree_cap),
        _merge_bounds(a.bounds, b.bounds),
        a.truncated or b.truncated,
    )
    for exponents, value in a.items():
        result._accumulate(exponents, value)
    for exponents, value in b.items():
        result._accumulate(exponents, value)
    return result


def series_mul(a, b):
    """Product of two series, pruned to the intersection of bounds and caps.

    Layers are multiplied pairwise in increasing degree, skipping pairs whose
    degree sum already exceeds the cap.
    """
    result = SparseLaurentSeries(
        None,
        _merge_cap(a.degree_cap, b.degree_cap),
        _merge_bounds(a.bounds, b.bounds),
        a.truncated or b.truncated,
    )
    for left_degree in a.degrees():
        left = a._layers[left_degree]
        for right_degree in b.degrees():
            if result.degree_cap is not None and left_degree + right_degree > result.degree_cap:
                result.truncated = True
                break
            right = b._layers[right_degree]
            for left_exponents, left_value in left.items():
                for right_exponents, right_value in right.items():
                    result._accumulate(
                        tuple(x + y for x, y in zip(left_exponents, right_exponents)),
                        left_value * right_value,
                    )
    return result


def series_exp_linear(c, variable, cap):
    """Return Σ_{n≤cap} cⁿ·t_variableⁿ/n!.

    Raises:
        ValueError: If cap is negative.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    c = Fraction(c)
    return SparseLaurentSeries(
        {_unit(variable, n): c**n / factorial(n) for n in range(cap + 1)}, degree_cap=cap
    )


def series_t_over_expm1(variable, cap):
    """Return Σ_{n≤cap} Bₙ·t_variableⁿ/n!, the series of t/(eᵗ − 1).

    Raises:
        ValueError: If cap is negative.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    return SparseLaurentSeries(
        {_unit(variable, n): bernoulli_number(n) / factorial(n) for n in range(cap + 1)}, degree_cap=cap
    )


def _default_pivot(form):
    variables = form.variables()
    for variable in variables:
        if abs(form.coefficient(variable)) == 1:
            return variable
    return variables[0]


def exact_divide_by_linear_form(n, form, pivot=None):
    """Divide a series by a linear form exactly.

    Treats ``n`` as a polynomial in the pivot variable whose coefficients are
    series in the other variables and runs long division from the highest
    pivot power down. The quotient q satisfies q·L = n.

    Args:
        n (SparseLaurentSeries): The dividend.
        form (LinearForm): The divisor.
        pivot (int, optional): Pivot variable; defaults to one with coefficient ±1.

    Returns:
        SparseLaurentSeries: The quotient, carrying the dividend's bounds.

    Raises:
        ValueError: If the pivot coefficient is zero.
        DivisibilityError: If the remainder is non-zero; the message names a remainder monomial.
    """
    pivot = pivot or _default_pivot(form)
    c = form.coefficient(pivot)
    if c == 0:
        raise ValueError(f"Pivot t{pivot} has a zero coefficient in {form}")
    logger.debug("Dividing %s terms by %s on pivot t%s", len(n), form, pivot)
    index = pivot - 1
    rest = [(j, form.coefficients[j]) for j in range(NVARS) if j != index and form.coefficients[j] != 0]

    buckets = {}
    for exponents, value in n.items():
        buckets.setdefault(exponents[index], {})[exponents] = value
    if not buckets:
        return SparseLaurentSeries(None, n.degree_cap, n.bounds, n.truncated)

    quotient = {}
    carry = {}
    top, bottom = max(buckets), min(buckets)
    # carry holds L'·q_j, the part of bucket j already produced by the previous quotient slice
    for j in range(top, bottom, -1):
        current = dict(buckets.get(j, {}))
        for exponents, value in carry.items():
            current[exponents] = current.get(exponents, 0) - value
        next_slice = {}
        for exponents, value in current.items():
            if value == 0:
                continue
            lowered = exponents[:index] + (exponents[index] - 1,) + exponents[index + 1 :]
            next_slice[lowered] = value / c
        quotient.update(next_slice)
        carry = {}
        for exponents, value in next_slice.items():
            for j_var, coefficient in rest:
                product = exponents[:j_var] + (exponents[j_var] + 1,) + exponents[j_var + 1 :]
                carry[product] = carry.get(product, 0) + coefficient * value

    remainder = dict(buckets.get(bottom, {}))
    for exponents, value in carry.items():
        remainder[exponents] = remainder.get(exponents, 0) - value
    leftover = sorted(exponents for exponents, value in remainder.items() if value != 0)
    if leftover:
        raise DivisibilityError(f"Dividend is not a multiple of {form}: remainder at monomial {leftover[0]}")
    return SparseLaurentSeries(quotient, n.degree_cap, n.bounds, n.truncated)


def _pruned(terms, dominant, bounds):
    kept = {}
    for exponents, value in terms.items():
        lo = bounds[dominant - 1][0]
        if lo is not None and exponents[dominant - 1] < lo:
            continue
        if any(
            hi is not None and exponents[j] > hi
            for j, (_, hi) in enumerate(bounds)
            if j != dominant - 1
        ):
            continue
        kept[exponents] = value
    return kept


def laurent_inverse_linear_form(form, ordering=None, bounds=None):
    """Expand 1/L in an iterated Laurent region.

    ``ordering`` lists the variables from the smallest to the largest, so the
    expansion is valid for |t_{ordering[0]}| ≪ … ≪ |t_{ordering[-1]}|. The
    highest-ordered variable t_h present in L is factored out and
    1/(c·t_h·(1 + R)) is expanded geometrically. Each power of −R lowers the
    t_h exponent by one and raises the others, so the expansion terminates
    once the bounds cut it off.

    Args:
        form (LinearForm): The form to invert.
        ordering (sequence, optional): Variables from smallest to largest. Defaults to 1..6.
        bounds (dict or tuple, optional): Per-variable ``(lo, hi)`` bounds.

    Returns:
        SparseLaurentSeries: Homogeneous of total degree −1, carrying ``bounds``.

    Raises:
        ValueError: If the bounds never cut the geometric series off.
    """
    ordering = tuple(ordering or range(1, NVARS + 1))
    if sorted(ordering) != list(range(1, NVARS + 1)):
        raise ValueError(f"ordering must be a permutation of 1..{NVARS}, got {ordering}")
    if bounds is None or isinstance(bounds, dict):
        bounds = make_bounds(bounds)
    rank = {variable: position for position, variable in enumerate(ordering)}
    present = form.variables()
    dominant = max(present, key=rank.__getitem__)
    c = form.coefficient(dominant)
    others = [variable for variable in present if variable != dominant]

    dominant_floor = bounds[dominant - 1][0]
    if dominant_floor is None and any(bounds[v - 1][1] is None for v in others):
        raise ValueError(f"Expansion of 1/({form}) is unbounded: cap t{dominant} from below or the rest from above")

    lead = {_unit(dominant, -1): 1 / c}
    step = {}
    for variable in others:
        exponents = [0] * NVARS
        exponents[variable - 1] = 1
        exponents[dominant - 1] = -1
        step[tuple(exponents)] = -form.coefficient(variable) / c

    result = SparseLaurentSeries(None, bounds=bounds)
    power = _pruned(lead, dominant, bounds)
    truncated = len(power) < len(lead)
    while power:
        for exponents, value in power.items():
            result._accumulate(exponents, value)
        following = {}
        for exponents, value in power.items():
            for shift, factor in step.items():
                product = tuple(x + y for x, y in zip(exponents, shift))
                following[product] = following.get(product, 0) + value * factor
        following = {exponents: value for exponents, value in following.items() if value != 0}
        power = _pruned(following, dominant, bounds)
        truncated = truncated or len(power) < len(following)
    result.truncated = result.truncated or truncated or bool(others)
    return result
