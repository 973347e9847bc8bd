"""Generalized Bernoulli coefficients of the G₂ generating function.

The generating function F(t, y) is a sum of 15 blocks, one per pair of
variables carrying e^t − 1 denominators. Each block has one to three
exponential summands, a sign, a scale and four linear-form denominators.
The blocks live in a literal table below.

Classes:
    GeneratingTerm: One block of F with fractional-part offsets still symbolic in y
    SpecializedTerm: A block with its offsets evaluated at a rational y
    TermTable: All 15 blocks at one y
    BernoulliCoefficient: P(k, y) together with its arguments
    CommonDenominatorExpansion: Reference expansion of F through the product of all forms
    CancellationError: A negative-exponent coefficient failed to cancel
    AlgorithmMismatchError: The two expansions disagree

Features:
    - Slice expansion: any coefficient of any monomial, negative exponents included, at desk cost
    - Common-denominator expansion: every P(k, y) of one total degree at once
    - Weyl-symmetric sums S(k, y) and ζ₂ values at orbit tuples as exact PiValues
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod

from witten_g2.algebra import (
    NVARS,
    ConsistencyError,
    LinearForm,
    PiValue,
    SparseLaurentSeries,
    exact_divide_by_linear_form,
    fractional_part,
    laurent_inverse_linear_form,
    make_bounds,
    series_exp_linear,
    series_mul,
    series_t_over_expm1,
)
from witten_g2.root_system import admissible_orbit_tuple, k_constant

logger = logging.getLogger("witten_g2.generating")

ALGORITHMS = ("A", "B")


class CancellationError(ConsistencyError):
    """A monomial with a negative exponent survived the sum of the 15 blocks."""


class AlgorithmMismatchError(ConsistencyError):
    """The slice and common-denominator expansions gave different coefficients."""


_FORM_TOKEN = re.compile(r"([+-]?)(\d*)t(\d)(?:/(\d+))?")
_OFFSET_TOKEN = re.compile(r"([+-]?)(\d*)(y[12])?(?:/(\d+))?")


def _tokens(text):
    return re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))


def parse_form(text):
    """Parse a form such as ``"t1/2+3t4/2-t6"`` into a LinearForm.

    Raises:
        ValueError: If a token is not of the shape ``±[n]tj[/d]``.
    """
    terms = {}
    for token in _tokens(text):
        match = _FORM_TOKEN.fullmatch(token)
        if match is None:
            raise ValueError(f"Cannot parse linear form token {token!r} in {text!r}")
        sign, numerator, variable, denominator = match.groups()
        value = Fraction(int(numerator or 1), int(denominator or 1))
        terms[int(variable)] = terms.get(int(variable), 0) + (-value if sign == "-" else value)
    return LinearForm.from_terms(terms)


@dataclass(frozen=True)
class Offset:
    """The exponential offset {a₁y₁ + a₂y₂ + c}, or 1 − {…} when complemented."""

    y1: Fraction
    y2: Fraction
    shift: Fraction
    complement: bool = False

    @classmethod
    def parse(cls, text):
        """Parse ``"{y1-y2/2+1/2}"`` or ``"1-{y1-y2}"``."""
        text = text.replace(" ", "")
        complement = text.startswith("1-{")
        body = text[3:] if complement else text[1:]
        if not body.endswith("}") or not (complement or text.startswith("{")):
            raise ValueError(f"Offsets must read '{{...}}' or '1-{{...}}', got {text!r}")
        coefficients = {"y1": Fraction(0), "y2": Fraction(0), None: Fraction(0)}
        for token in _tokens(body[:-1]):
            match = _OFFSET_TOKEN.fullmatch(token)
            if match is None or not (match.group(2) or match.group(3)):
                raise ValueError(f"Cannot parse offset token {token!r} in {text!r}")
            sign, numerator, variable, denominator = match.groups()
            value = Fraction(int(numerator or 1), int(denominator or 1))
            coefficients[variable] += -value if sign == "-" else value
        return cls(coefficients["y1"], coefficients["y2"], coefficients[None], complement)

    def evaluate(self, y):
        y1, y2 = y
        inner = fractional_part(self.y1 * y1 + self.y2 * y2 + self.shift)
        return 1 - inner if self.complement else inner


@dataclass(frozen=True)
class GeneratingTerm:
    """One block of F with offsets symbolic in y.

    Attributes:
        free_pair (tuple): The variables (a, b) carrying e^t − 1 denominators.
        summands (tuple): Offset pairs; the first offset multiplies t_a, the second t_b.
        forms (tuple): The four remaining linear-form denominators.
        sign (int): ±1.
        scale (Fraction): 1, 1/2 or 1/3.
    """

    free_pair: tuple
    summands: tuple
    forms: tuple
    sign: int
    scale: Fraction

    def specialize(self, y):
        offsets = tuple((x.evaluate(y), z.evaluate(y)) for x, z in self.summands)
        return SpecializedTerm(self.free_pair, offsets, self.forms, self.sign, self.scale)


def _term(pair, sign, scale, summands, forms):
    return GeneratingTerm(
        pair,
        tuple((Offset.parse(x), Offset.parse(z)) for x, z in summands),
        tuple(parse_form(form) for form in forms),
        sign,
        Fraction(scale),
    )


# Blocks of F(t, y). Offsets multiply (t_a, t_b) of the free pair.
GENERATING_TERMS = (
    _term((1, 2), +1, 1, [("{y1}", "{y2}")],
          ["t1+t2-t3", "t1+2t2-t4", "t1+3t2-t5", "2t1+3t2-t6"]),
    _term((1, 3), +1, 1, [("{y1-y2}", "{y2}")],
          ["t1+t2-t3", "t1-2t3+t4", "2t1-3t3+t5", "t1-3t3+t6"]),
    _term((1, 4), +1, "1/2", [("{y1-y2/2+1/2}", "{y2/2+1/2}"), ("{y1-y2/2}", "{y2/2}")],
          ["t1/2+t2-t4/2", "t1/2-t3+t4/2", "t1/2-3t4/2+t5", "t1/2+3t4/2-t6"]),
    _term((1, 5), -1, "1/3",
          [("{y1-y2/3+2/3}", "{y2/3+1/3}"), ("{y1-y2/3+4/3}", "{y2/3+2/3}"), ("{y1-y2/3}", "{y2/3}")],
          ["t1/3-t4+2t5/3", "t1/3+t2-t5/3", "2t1/3-t3+t5/3", "t1+t5-t6"]),
    _term((1, 6), -1, "1/3",
          [("{y1-2y2/3+1/3}", "{y2/3+1/3}"), ("{y1-2y2/3+2/3}", "{y2/3+2/3}"), ("{y1-2y2/3}", "{y2/3}")],
          ["t1+t5-t6", "t1/3+t4-2t6/3", "2t1/3+t2-t6/3", "t1/3-t3+t6/3"]),
    _term((2, 3), -1, 1, [("1-{y1-y2}", "{y1}")],
          ["t1+t2-t3", "t2+t3-t4", "2t2+t3-t5", "t2+2t3-t6"]),
    _term((2, 4), -1, 1, [("1-{2y1-y2}", "{y1}")],
          ["t1+2t2-t4", "t2+t3-t4", "t2+t4-t5", "t2-2t4+t6"]),
    _term((2, 5), +1, 1, [("1-{3y1-y2}", "{y1}")],
          ["t1+3t2-t5", "2t2+t3-t5", "t2+t4-t5", "3t2-2t5+t6"]),
    _term((2, 6), +1, "1/2", [("{-3y1/2+y2+1/2}", "{y1/2+1/2}"), ("1-{3y1/2-y2}", "{y1/2}")],
          ["t1+3t2/2-t6/2", "t2/2+t3-t6/2", "t2/2-t4+t6/2", "3t2/2-t5+t6/2"]),
    _term((3, 4), -1, 1, [("{2y1-y2}", "1-{y1-y2}")],
          ["t2+t3-t4", "t1-2t3+t4", "t3-2t4+t5", "t3+t4-t6"]),
    # the second summand is required for the residue along 2t2+t3-t5 to cancel
    _term((3, 5), +1, "1/2",
          [("{3y1/2-y2/2}", "1-{y1/2-y2/2}"), ("{3y1/2-y2/2+1/2}", "1-{y1/2-y2/2+1/2}")],
          ["t2+t3/2-t5/2", "t3/2-t4+t5/2", "t1-3t3/2+t5/2", "3t3/2+t5/2-t6"]),
    _term((3, 6), +1, 1, [("{3y1-2y2}", "1-{y1-y2}")],
          ["3t3+t5-2t6", "t2+2t3-t6", "t3+t4-t6", "t1-3t3+t6"]),
    _term((4, 5), -1, 1, [("{3y1-y2}", "1-{2y1-y2}")],
          ["t2+t4-t5", "t3-2t4+t5", "t1-3t4+2t5", "3t4-t5-t6"]),
    _term((4, 6), -1, 1, [("1-{3y1-2y2}", "{2y1-y2}")],
          ["t1+3t4-2t6", "t3+t4-t6", "t2-2t4+t6", "3t4-t5-t6"]),
    _term((5, 6), +1, "1/3",
          [("1-{y1-2y2/3}", "{y1-y2/3}"), ("{-y1+2y2/3+2/3}", "{y1-y2/3+2/3}"),
           ("{-y1+2y2/3+4/3}", "{y1-y2/3+4/3}")],
          ["t1+t5-t6", "t3+t5/3-2t6/3", "t4-t5/3-t6/3", "t2-2t5/3+t6/3"]),
)  # fmt: skip


@dataclass(frozen=True)
class SpecializedTerm:
    """A block of F with its exponential offsets evaluated at one y."""

    free_pair: tuple
    offsets: tuple
    forms: tuple
    sign: int
    scale: Fraction

    def assigned_forms(self):
        """Return ``(c, form)`` pairs, c being the single non-free variable of the form."""
        pairs = []
        for form in self.forms:
            bound = [variable for variable in form.variables() if variable not in self.free_pair]
            if len(bound) != 1:
                raise ValueError(f"Form {form} of block {self.free_pair} must hold exactly one non-free variable")
            pairs.append((bound[0], form))
        return pairs


@dataclass(frozen=True)
class TermTable:
    y: tuple
    terms: tuple

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class BernoulliCoefficient:
    k: tuple
    y: tuple
    value: Fraction


def validate_term(term):
    """Check the structural invariants of one block.

    Raises:
        ValueError: On a violated invariant, naming the block.
    """
    a, b = term.free_pair
    if a == b or not (1 <= a <= NVARS and 1 <= b <= NVARS):
        raise ValueError(f"Invalid free pair {term.free_pair}")
    if len(term.forms) != 4:
        raise ValueError(f"Block {term.free_pair} needs 4 forms, got {len(term.forms)}")
    if len(term.summands if isinstance(term, GeneratingTerm) else term.offsets) * term.scale != 1:
        raise ValueError(f"Block {term.free_pair}: summand count must equal 1/scale")
    specialized = term if isinstance(term, SpecializedTerm) else term.specialize((0, 0))
    covered = sorted(c for c, _ in specialized.assigned_forms())
    expected = sorted(set(range(1, NVARS + 1)) - {a, b})
    if covered != expected:
        raise ValueError(f"Block {term.free_pair}: non-free variables {covered} differ from {expected}")
    for _, form in specialized.assigned_forms():
        if form.coefficient(a) == 0 or form.coefficient(b) == 0:
            raise ValueError(f"Block {term.free_pair}: form {form} misses a free variable")


def build_term_table(y=(0, 0)):
    """Specialize every block of F at a rational y.

    Args:
        y (tuple): Two rationals; fractional parts are taken exactly.

    Returns:
        TermTable: The 15 specialized blocks in free-pair order.
    """
    y = tuple(Fraction(component) for component in y)
    if len(y) != 2:
        raise ValueError(f"y must have two coordinates, got {len(y)}")
    return _term_table(y)


@lru_cache(maxsize=64)
def _term_table(y):
    terms = tuple(term.specialize(y) for term in GENERATING_TERMS)
    for term in terms:
        validate_term(term)
    if sorted(term.free_pair for term in terms) != list(combinations(range(1, NVARS + 1), 2)):
        raise ValueError("The blocks must cover every pair of variables exactly once")
    return TermTable(y, terms)


@lru_cache(maxsize=4096)
def _free_layer(term, degree):
    """Degree-``degree`` part of sign·scale·Σ e^{x t_a}t_a/(e^{t_a}−1)·e^{z t_b}t_b/(e^{t_b}−1)."""
    a, b = term.free_pair
    left_base = series_t_over_expm1(a, degree)
    right_base = series_t_over_expm1(b, degree)
    total = SparseLaurentSeries()
    for x, z in term.offsets:
        left = series_mul(left_base, series_exp_linear(x, a, degree))
        right = series_mul(right_base, series_exp_linear(z, b, degree))
        total = total + series_mul(left, right).homogeneous_part(degree)
    return SparseLaurentSeries(total.terms).scale(term.sign * term.scale)


def _ranking(ordering):
    ordering = tuple(ordering or range(1, NVARS + 1))
    return ordering, {variable: position for position, variable in enumerate(ordering)}


def _slice_coefficient(term, exponents, ordering):
    """Coefficient of t^exponents in one block under the iterated Laurent ordering.

    Each factor t_c/L_c is expanded with t_c pinned to its target exponent and
    the lower-ranked free variable kept within [0, target]. Every factor and
    the free layer have non-negative exponents in that variable.
    """
    degree = sum(exponents)
    if degree < 0:
        return Fraction(0)
    ordering, rank = _ranking(ordering)
    a, b = term.free_pair
    lower = a if rank[a] < rank[b] else b
    lower_target = exponents[lower - 1]
    if lower_target < 0:
        return Fraction(0)
    product = _free_layer(term, degree).restrict(make_bounds({lower: (0, lower_target)}))
    for c, form in term.assigned_forms():
        pinned = exponents[c - 1] - 1
        bounds = make_bounds({c: (pinned, pinned), lower: (0, lower_target)})
        factor = laurent_inverse_linear_form(form, ordering, bounds).shift(c, 1)
        product = series_mul(product, factor)
        if not product:
            return Fraction(0)
    return product.coefficient(exponents)


def laurent_coefficient(exponents, y=(0, 0), ordering=None):
    """Raw coefficient of t^exponents in F, summed over the 15 blocks.

    Exponents may be negative; for those the sum must vanish.
    """
    exponents = tuple(exponents)
    if len(exponents) != NVARS:
        raise ValueError(f"Expected {NVARS} exponents, got {len(exponents)}")
    table = build_term_table(y)
    ordering = tuple(ordering) if ordering else None
    return sum((_slice_coefficient(term, exponents, ordering) for term in table), Fraction(0))


def _compositions(total, parts, floor=0):
    if parts == 1:
        if total >= floor:
            yield (total,)
        return
    for first in range(floor, total - floor * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, floor):
            yield (first,) + rest


def laurent_cancellation_failures(y=(0, 0), max_degree=2, floor=-1, ordering=None):
    """List exponent vectors with a negative entry whose coefficient in F is non-zero.

    Scans every vector with entries ≥ ``floor`` and total degree ≤ ``max_degree``.
    """
    if floor >= 0:
        raise ValueError(f"floor must be negative, got {floor}")
    failures = []
    for degree in range(NVARS * floor, max_degree + 1):
        for exponents in _compositions(degree, NVARS, floor):
            if min(exponents) >= 0:
                continue
            value = laurent_coefficient(exponents, y, ordering)
            if value != 0:
                failures.append((exponents, value))
    logger.debug("Cancellation scan to degree %s found %s survivors", max_degree, len(failures))
    return failures


def assert_laurent_cancellation(y=(0, 0), max_degree=2, floor=-1, ordering=None):
    """Raise CancellationError naming the first surviving negative-exponent monomial."""
    failures = laurent_cancellation_failures(y, max_degree, floor, ordering)
    if failures:
        exponents, value = failures[0]
        raise CancellationError(f"Coefficient {value} of monomial {exponents} did not cancel")


class CommonDenominatorExpansion:
    """Expansion of F through its common denominator D, the product of all distinct forms.

    Layer m of F·D is Σ_f [g_f]_m·Q_f/λ_f, where Q_f is ∏t_c times the forms of
    D missing from block f and λ_f the normalization scalar of the block's forms.
    Dividing that layer by the forms of D one at a time yields the whole
    degree-m part of F.

    Args:
        table (TermTable): The blocks at one y.
    """

    def __init__(self, table):
        self.table = table
        self.forms = []
        self._normalized = []
        for term in table:
            own = []
            scalar = Fraction(1)
            for _, form in term.assigned_forms():
                factor, normalized = form.normalized()
                scalar *= factor
                own.append(normalized)
                if normalized not in self.forms:
                    self.forms.append(normalized)
            self._normalized.append((term, own, scalar))
        self._cofactors = {}
        self._layers = {}
        logger.info("Common denominator built from %s distinct forms", len(self.forms))

    @property
    def denominator_degree(self):
        return len(self.forms)

    def _cofactor(self, index):
        if index not in self._cofactors:
            term, own, _ = self._normalized[index]
            series = SparseLaurentSeries.monomial(
                tuple(1 if (j + 1) not in term.free_pair else 0 for j in range(NVARS))
            )
            for form in self.forms:
                if form not in own:
                    series = series_mul(series, form.as_series())
            self._cofactors[index] = series
        return self._cofactors[index]

    def layer(self, degree):
        """Return the degree-``degree`` homogeneous part of F as a series.

        Raises:
            DivisibilityError: If a division leaves a remainder.
        """
        if degree not in self._layers:
            numerator = SparseLaurentSeries()
            for index, (term, _, scalar) in enumerate(self._normalized):
                numerator = numerator + series_mul(_free_layer(term, degree), self._cofactor(index)).scale(1 / scalar)
            logger.debug("Layer %s: numerator with %s terms", degree, len(numerator))
            for form in self.forms:
                numerator = exact_divide_by_linear_form(numerator, form)
            self._layers[degree] = numerator
        return self._layers[degree]

    def coefficient(self, exponents):
        return self.layer(sum(exponents)).coefficient(tuple(exponents))


@lru_cache(maxsize=8)
def _common_denominator(y):
    return CommonDenominatorExpansion(build_term_table(y))


def _validated_k(k):
    k = tuple(int(entry) for entry in k)
    if len(k) != NVARS or min(k) < 0:
        raise ValueError(f"k must be {NVARS} non-negative integers, got {k}")
    return k


def _as_y(y):
    return tuple(Fraction(component) for component in y)


def bernoulli_coefficient(k, y=(0, 0), algorithm="A", ordering=None):
    """Return P(k, y), the coefficient of ∏ t_j^{k_j}/k_j! in F(t, y).

    Args:
        k (tuple): Six non-negative integers.
        y (tuple): Rational pair.
        algorithm (str): ``"A"`` for the slice expansion, ``"B"`` for the common denominator.
        ordering (tuple, optional): Variable ordering for ``"A"``, smallest first.

    Returns:
        Fraction: The exact coefficient.

    Raises:
        ValueError: On malformed k or an unknown algorithm.
        DivisibilityError: If the common-denominator expansion breaks down.

    Examples:
        >>> bernoulli_coefficient((0, 0, 0, 0, 0, 0))
        Fraction(1, 1)
    """
    k = _validated_k(k)
    if algorithm not in ALGORITHMS:
        raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {algorithm!r}")
    return _bernoulli_coefficient(k, _as_y(y), algorithm, tuple(ordering) if ordering else None)


@lru_cache(maxsize=8192)
def _bernoulli_coefficient(k, y, algorithm, ordering):
    if algorithm == "A":
        raw = laurent_coefficient(k, y, ordering)
    else:
        raw = _common_denominator(y).coefficient(k)
    return raw * prod(factorial(entry) for entry in k)


def coefficient_layer(degree, y=(0, 0), algorithm="B"):
    """Return every P(k, y) with |k| = degree, zeros included, in lexicographic k order."""
    y = _as_y(y)
    return [
        BernoulliCoefficient(k, y, bernoulli_coefficient(k, y, algorithm))
        for k in sorted(_compositions(degree, NVARS))
    ]


def cross_check(k, y=(0, 0)):
    """Compute P(k, y) with both algorithms and return the common value.

    Raises:
        AlgorithmMismatchError: If the two values differ.
    """
    first = bernoulli_coefficient(k, y, "A")
    second = bernoulli_coefficient(k, y, "B")
    if first != second:
        raise AlgorithmMismatchError(f"P({tuple(k)}, {tuple(y)}): slice gives {first}, common denominator gives {second}")
    return first


_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def weyl_sum_exact(k, y=(0, 0), algorithm="A"):
    """Return S(k, y) = P(k, y)·∏(2πi)^{k_j}/k_j! as an exact PiValue."""
    k = _validated_k(k)
    weight = sum(k)
    coefficient = bernoulli_coefficient(k, y, algorithm) * 2**weight / prod(factorial(entry) for entry in k)
    real, imag = _I_POWERS[weight % 4]
    return PiValue(coefficient * real, coefficient * imag, weight)


def zeta2_exact(k, algorithm="A"):
    """Return ζ₂(k) = S(k, 0)/12 for k of the shape (2p, 2q, 2q, 2q, 2p, 2p).

    Raises:
        ValueError: If k is not constant and even on both root-length classes.

    Examples:
        >>> str(zeta2_exact((2, 2, 2, 2, 2, 2)))
        '23/297904566960*pi^12'
    """
    k = _validated_k(k)
    if not admissible_orbit_tuple(k):
        raise ValueError(
            f"k={k} must be even and constant on the short roots (1,5,6) and on the long roots (2,3,4)"
        )
    return weyl_sum_exact(k, (0, 0), algorithm).scale(Fraction(1, 12))


def witten_volume_constant(kk, algorithm="A"):
    """Return ζ_W(2kk) = K^{2kk}·ζ₂(2kk, …, 2kk), a rational multiple of π^{12kk}."""
    if kk < 1:
        raise ValueError(f"kk must be >= 1, got {kk}")
    return zeta2_exact((2 * kk,) * NVARS, algorithm).scale(k_constant() ** (2 * kk))


def orbit_value_table(bound, algorithm="A"):
    """Yield ``(k, ζ₂(k))`` for k = (2p, 2q, 2q, 2q, 2p, 2p) with 1 ≤ p, q ≤ bound."""
    for p in range(1, bound + 1):
        for q in range(1, bound + 1):
            k = (2 * p, 2 * q, 2 * q, 2 * q, 2 * p, 2 * p)
            yield k, zeta2_exact(k, algorithm)
