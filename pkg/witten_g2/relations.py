"""Functional relations between G₂ double zeta values and Riemann zeta values.

For positive integers p, q, r, u, v six ζ₂ values with one free argument s
sum to a finite combination of ζ(s+W₀−2k) and φ(s+W₀−2k), where
W₀ = 2(p+q+r+u+v) and φ(s) = (2^{1−s} − 1)ζ(s). The combination is built
from eight correction parts with three blocks each. Every block is a
triple finite sum kept below as literal data.

Classes:
    RelationParams: The five positive integers of a relation
    CorrectionBlock: One block of a correction part as literal data
    CorrectionRow: One exact coefficient of the assembled table
    CorrectionTable: All rows for one parameter vector
    RelationReport: Result of a numeric check
    EvenReduction: Exact value of the six-term sum at an even s
    SingularHit: Membership of an argument tuple in a singular family
    ZetaProductExpression: A rational combination of products of Riemann zeta values
    SingularArgumentError: A zeta argument of the table sits on the pole

Features:
    - Exact assembly of the correction table with named block variants
    - Symbolic form of the relation as a polynomial in 2^{−s}
    - Exact reduction at even s and a numeric check at real s
    - Exact singular-locus predicate and two convolution identity oracles
"""

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from math import factorial
from typing import Callable, NamedTuple

import mpmath as mp
import pydantic

from witten_g2.algebra import PiPolynomial, PiValue, binomial, phi_even_exact, zeta_even_exact
from witten_g2.config import PINNED_VARIANTS, RelationConfig
from witten_g2.generating import weyl_sum_exact
from witten_g2.numeric import NumericValue, phi_numeric, riemann_zeta_numeric, zeta2_numeric
from witten_g2.util import parse_rational

logger = logging.getLogger("witten_g2.relations")

ZETA = "zeta"
ZETA_PLUS_PHI = "zeta+phi"
ZETA_MINUS_PHI = "zeta-phi"
KINDS = (ZETA, ZETA_PLUS_PHI, ZETA_MINUS_PHI)

FREE = "s"


class SingularArgumentError(ValueError):
    """A zeta argument of the correction table coincides with the pole at 1."""


class RelationParams(pydantic.BaseModel):
    """The positive integers p, q, r, u, v of a relation."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    p: pydantic.PositiveInt
    q: pydantic.PositiveInt
    r: pydantic.PositiveInt
    u: pydantic.PositiveInt
    v: pydantic.PositiveInt

    @classmethod
    def of(cls, p, q, r, u, v):
        return cls(p=p, q=q, r=r, u=u, v=v)

    @property
    def weight(self):
        """W₀ = 2p + 2q + 2r + 2u + 2v."""
        return 2 * (self.p + self.q + self.r + self.u + self.v)

    def astuple(self):
        return (self.p, self.q, self.r, self.u, self.v)


def _as_params(params):
    if isinstance(params, RelationParams):
        return params
    return RelationParams.of(*params)


def lhs_zeta_tuples(params):
    """Return the six argument patterns, each with ``"s"`` in its free slot.

    Examples:
        >>> lhs_zeta_tuples((1, 1, 1, 1, 1))[0]
        (2, 's', 2, 2, 2, 2)
    """
    p, q, r, u, v = (2 * value for value in _as_params(params).astuple())
    return [
        (p, FREE, q, r, u, v),
        (p, q, FREE, r, v, u),
        (u, r, FREE, q, v, p),
        (u, FREE, r, q, p, v),
        (v, r, q, FREE, u, p),
        (v, q, r, FREE, p, u),
    ]


def substitute(pattern, s):
    """Replace the free slot of a pattern by ``s``."""
    return tuple(s if entry == FREE else entry for entry in pattern)


class _Indices(NamedTuple):
    p: int
    q: int
    r: int
    u: int
    v: int
    k: int
    sigma: int = 0
    rho: int = 0
    omega: int = 0


@dataclass(frozen=True)
class CorrectionBlock:
    """One block of a correction part.

    The block contributes

        sign · w(k) · ζ(2k) · Σ_σ Σ_ρ Σ_ω ∏ binomials · (−1)^parity · 2^two · 3^three

    times ζ, ζ+φ or ζ−φ at s+W₀−2k, for k from 0 to ``outer``. The weight
    w(k) is 1, 2^{−2k} or 1−2^{−2k} according to ``kind``. Every field
    after ``sign`` is a function of the current indices.
    """

    part: int
    block: int
    kind: str
    sign: int
    outer: Callable
    sigma_max: Callable
    rho_max: Callable
    omega_max: Callable
    binomials: tuple
    parity: Callable
    two: Callable
    three: Callable

    def weight(self, k):
        if self.kind == ZETA:
            return Fraction(1)
        if self.kind == ZETA_PLUS_PHI:
            return Fraction(1, 4**k)
        return 1 - Fraction(1, 4**k)

    def inner_sum(self, params, k):
        """Evaluate the triple sum at one k exactly."""
        base = _Indices(*params.astuple(), k)
        total = Fraction(0)
        for sigma in range(self.sigma_max(base) + 1):
            at_sigma = base._replace(sigma=sigma)
            for rho in range(self.rho_max(at_sigma) + 1):
                at_rho = at_sigma._replace(rho=rho)
                for omega in range(self.omega_max(at_rho) + 1):
                    x = at_rho._replace(omega=omega)
                    product = 1
                    for entry in self.binomials:
                        product *= binomial(*entry(x))
                        if not product:
                            break
                    if not product:
                        continue
                    term = Fraction(product) * Fraction(2) ** self.two(x) * Fraction(3) ** self.three(x)
                    total += -term if self.parity(x) % 2 else term
        return total

    def coefficients(self, params):
        """Yield ``(k, coefficient)`` without the ζ(2k) factor, zeros skipped."""
        for k in range(self.outer(_Indices(*params.astuple(), 0)) + 1):
            weight = self.weight(k)
            if not weight:
                continue
            value = self.sign * weight * self.inner_sum(params, k)
            if value:
                yield k, value


def _zeta_block(part, sign, outer, sigma_max, rho_max, omega_max, binomials, parity, two, three):
    return CorrectionBlock(part, 1, ZETA, sign, outer, sigma_max, rho_max, omega_max, binomials, parity, two, three)


def _phi_blocks(part, sign, sigma_max, rho_max, omega_max, binomials, parity, two, three):
    """The ζ+φ and ζ−φ blocks of a part, which share their inner sum."""
    common = (sigma_max, rho_max, omega_max, binomials, parity, two, three)
    return (
        CorrectionBlock(part, 2, ZETA_PLUS_PHI, sign, _v, *common),
        CorrectionBlock(part, 3, ZETA_MINUS_PHI, sign, _v, *common),
    )


def _v(x):
    return x.v


def _zero(x):
    return 0


CORRECTION_BLOCKS = (
    _zeta_block(
        1, -2, lambda x: x.p,
        lambda x: 2 * x.p - 2 * x.k,
        lambda x: 2 * x.p - 2 * x.k - x.sigma,
        lambda x: 2 * x.p - 2 * x.k - x.sigma - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 1 - 2 * x.k - x.sigma - x.rho - x.omega, 2 * x.q - 1),
        ),
        _zero,
        lambda x: x.sigma - 2 * x.r - x.omega,
        lambda x: -2 * x.u - 2 * x.v - x.sigma - x.rho,
    ),
    *_phi_blocks(
        1, -2,
        lambda x: 2 * x.p - 1,
        lambda x: 2 * x.p - 1 - x.sigma,
        lambda x: 2 * x.p - 1 - x.sigma - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.sigma - x.rho - x.omega, 2 * x.q - 1),
        ),
        _zero,
        lambda x: x.sigma - 2 * x.r - x.omega,
        lambda x: -2 * x.u - 2 * x.v + 2 * x.k - x.sigma - x.rho - 1,
    ),
    _zeta_block(
        2, -2, lambda x: x.u,
        lambda x: 2 * x.u - 2 * x.k,
        lambda x: 2 * x.p - 1,
        lambda x: 2 * x.p - 2 * x.k - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 2 * x.k - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.rho - x.omega, 2 * x.q - 1),
        ),
        _zero,
        lambda x: x.sigma - 2 * x.r - x.omega,
        lambda x: -2 * x.u - 2 * x.v + 2 * x.k - x.rho - 1,
    ),
    *_phi_blocks(
        2, -2,
        lambda x: 2 * x.u - 1,
        lambda x: 2 * x.p - 1,
        lambda x: 2 * x.p - 1 - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1 - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.rho - x.omega, 2 * x.q - 1),
        ),
        _zero,
        lambda x: x.sigma - 2 * x.r - x.omega,
        lambda x: -2 * x.u - 2 * x.v + 2 * x.k - x.rho - 1,
    ),
    _zeta_block(
        3, -2, lambda x: x.q,
        lambda x: 2 * x.q - 2 * x.k,
        lambda x: 2 * x.q - 2 * x.k - x.sigma,
        lambda x: 2 * x.q - 2 * x.k - x.sigma - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 1 - 2 * x.k - x.sigma - x.rho - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.sigma + x.rho + x.omega,
        lambda x: x.sigma - 2 * x.u - x.rho,
        _zero,
    ),
    *_phi_blocks(
        3, 2,
        lambda x: 2 * x.q - 1,
        lambda x: 2 * x.q - 1 - x.sigma,
        lambda x: 2 * x.q - 1 - x.sigma - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.sigma - x.rho - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.sigma + x.rho + x.omega,
        lambda x: x.sigma - 2 * x.u - x.rho,
        _zero,
    ),
    _zeta_block(
        4, 2, lambda x: x.u,
        lambda x: 2 * x.u - 2 * x.k,
        lambda x: 2 * x.q - 1,
        lambda x: 2 * x.q - 1 - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 2 * x.k - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.rho - x.omega, 2 * x.q - 1),
        ),
        lambda x: x.rho + x.omega,
        lambda x: -2 * x.u + 2 * x.k + 2 * x.sigma - x.rho - 1,
        lambda x: -2 * x.v - x.sigma,
    ),
    *_phi_blocks(
        4, 2,
        lambda x: 2 * x.u - 1,
        lambda x: 2 * x.q - 1,
        lambda x: 2 * x.q - 1 - x.rho,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1 - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.rho - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.rho + x.omega,
        lambda x: -2 * x.u + 2 * x.sigma - x.rho,
        lambda x: -2 * x.v + 2 * x.k - x.sigma - 1,
    ),
    _zeta_block(
        5, -2, lambda x: x.r,
        lambda x: 2 * x.r - 2 * x.k,
        lambda x: 2 * x.r - 2 * x.k - x.sigma,
        lambda x: 2 * x.p - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 2 * x.k - x.sigma - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.q - 1),
        ),
        lambda x: x.rho,
        lambda x: -2 * x.r + 2 * x.k + 2 * x.sigma + x.rho - x.omega - 1,
        _zero,
    ),
    CorrectionBlock(
        5, 2, ZETA_PLUS_PHI, -2, _v,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.r - 1 - x.sigma,
        lambda x: 2 * x.p - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.sigma - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.q - 1),
        ),
        lambda x: x.rho,
        lambda x: -2 * x.r + 2 * x.sigma + x.rho - x.omega,
        _zero,
    ),
    CorrectionBlock(
        5, 3, ZETA_MINUS_PHI, -2, _v,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.p - 1 - x.sigma,
        lambda x: 2 * x.p - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.sigma - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.q - 1),
        ),
        lambda x: x.rho,
        lambda x: -2 * x.r + 2 * x.sigma + x.rho - x.omega,
        _zero,
    ),
    _zeta_block(
        6, 2, lambda x: x.u,
        lambda x: 2 * x.u - 2 * x.k,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.p - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 2 * x.k - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.q - 1),
        ),
        lambda x: x.rho,
        lambda x: -2 * x.r + x.sigma + x.rho - x.omega,
        lambda x: -2 * x.v - x.sigma,
    ),
    *_phi_blocks(
        6, 2,
        lambda x: 2 * x.u - 1,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.p - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1 - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.q - 1),
        ),
        lambda x: x.rho,
        lambda x: -2 * x.r + x.sigma + x.rho - x.omega,
        lambda x: -2 * x.v - x.sigma,
    ),
    _zeta_block(
        7, 2, lambda x: x.r,
        lambda x: 2 * x.r - 2 * x.k,
        lambda x: 2 * x.r - 2 * x.k - x.sigma,
        lambda x: 2 * x.q - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 2 * x.k - x.sigma - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.rho + x.omega,
        lambda x: x.sigma,
        _zero,
    ),
    *_phi_blocks(
        7, 2,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.r - 1 - x.sigma,
        lambda x: 2 * x.q - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.sigma - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.rho + x.omega,
        lambda x: x.sigma,
        _zero,
    ),
    _zeta_block(
        8, -2, lambda x: x.u,
        lambda x: 2 * x.u - 2 * x.k,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.q - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 1, x.sigma),
            lambda x: (x.rho + 2 * x.u - 2 * x.k - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.rho + x.omega,
        lambda x: x.sigma,
        lambda x: -2 * x.v - x.sigma,
    ),
    *_phi_blocks(
        8, -2,
        lambda x: 2 * x.u - 1,
        lambda x: 2 * x.r - 1,
        lambda x: 2 * x.q - 1,
        (
            lambda x: (x.sigma + 2 * x.v - 2 * x.k, x.sigma),
            lambda x: (x.rho + 2 * x.u - 1 - x.sigma, x.rho),
            lambda x: (x.omega + 2 * x.r - 1 - x.rho, x.omega),
            lambda x: (2 * x.p + 2 * x.q - 2 - x.omega, 2 * x.p - 1),
        ),
        lambda x: x.rho + x.omega,
        lambda x: x.sigma,
        lambda x: -2 * x.v + 2 * x.k - x.sigma - 1,
    ),
)


def _with_binomial(position, entry):
    def apply(block):
        binomials = list(block.binomials)
        binomials[position] = entry
        return replace(block, binomials=tuple(binomials))

    return apply


# name -> ((part, block) pairs it rewrites, rewrite)
VARIANTS = {
    "part2.zeta.omega_limit": (
        {(2, 1)},
        lambda block: replace(block, omega_max=lambda x: 2 * x.p - 1 - x.rho),
    ),
    "part4.zeta.final_binomial": (
        {(4, 1)},
        _with_binomial(3, lambda x: (2 * x.p + 2 * x.q - 2 - x.rho - x.omega, 2 * x.p - 1)),
    ),
    "part5.minus.rho_limit": (
        {(5, 3)},
        lambda block: replace(block, rho_max=lambda x: 2 * x.r - 1 - x.sigma),
    ),
    "part6.shifted.power_of_three": (
        {(6, 2), (6, 3)},
        lambda block: replace(block, three=lambda x: -2 * x.v + 2 * x.k - x.sigma - 1),
    ),
}


def correction_blocks(variants=frozenset()):
    """Return the 24 blocks with the named variants applied.

    Raises:
        ValueError: If a variant name is unknown.
    """
    unknown = set(variants) - set(VARIANTS)
    if unknown:
        raise ValueError(f"Unknown correction variants {sorted(unknown)}; known: {sorted(VARIANTS)}")
    blocks = []
    for block in CORRECTION_BLOCKS:
        for name in sorted(variants):
            targets, rewrite = VARIANTS[name]
            if (block.part, block.block) in targets:
                block = rewrite(block)
        blocks.append(block)
    return tuple(blocks)


class CorrectionRow(NamedTuple):
    """coefficient·ζ(2k)·Z(s+W₀−2k) with Z = ζ, ζ+φ or ζ−φ by ``kind``."""

    part: int
    block: int
    k: int
    kind: str
    coefficient: Fraction


@dataclass(frozen=True)
class CorrectionTable:
    params: RelationParams
    variants: frozenset
    rows: tuple

    @property
    def weight(self):
        return self.params.weight

    def shift(self, row):
        """The offset W₀ − 2k of the zeta argument of ``row``."""
        return self.weight - 2 * row.k

    def parts(self):
        return sorted({row.part for row in self.rows})


def build_correction_table(params, variants=frozenset()):
    """Evaluate every block exactly.

    Without ``variants`` the blocks are taken as written; pass
    ``PINNED_VARIANTS`` for the set that makes the relation hold.

    Examples:
        >>> table = build_correction_table((1, 1, 1, 1, 1), PINNED_VARIANTS)
        >>> table.weight
        10
    """
    params = _as_params(params)
    variants = frozenset(variants)
    rows = []
    for block in correction_blocks(variants):
        for k, coefficient in block.coefficients(params):
            rows.append(CorrectionRow(block.part, block.block, k, block.kind, coefficient))
    logger.debug("correction table for %s has %s rows", params.astuple(), len(rows))
    return CorrectionTable(params, variants, tuple(rows))


def symbolic_relation(params, variants=PINNED_VARIANTS):
    """Fold the table into the sum of the six ζ₂ terms as a function of s.

    Returns:
        dict: k → (c₀, c₁) with Σ six ζ₂(s) = Σ_k ζ(2k)·(c₀ + c₁·2^{−s})·ζ(s+W₀−2k).
        At k = 0 the factor ζ(0) = −1/2 is already folded in.

    Examples:
        >>> relation = symbolic_relation((1, 1, 1, 1, 1))
        >>> relation[1]
        (Fraction(466, 81), Fraction(-1, 81))
    """
    table = build_correction_table(params, variants)
    folded = {}
    for row in table.rows:
        c0, c1 = folded.get(row.k, (Fraction(0), Fraction(0)))
        two_power = Fraction(2) ** (1 - table.shift(row))
        if row.kind == ZETA:
            c0 -= row.coefficient
        elif row.kind == ZETA_PLUS_PHI:
            c1 -= row.coefficient * two_power
        else:
            c0 -= 2 * row.coefficient
            c1 += row.coefficient * two_power
        folded[row.k] = (c0, c1)
    if 0 in folded:
        c0, c1 = folded[0]
        folded[0] = (-c0 / 2, -c1 / 2)
    return {k: folded[k] for k in sorted(folded) if folded[k] != (0, 0)}


def _row_factor(kind, argument):
    """Z(argument) for an even argument ≥ 2 as a PiValue."""
    zeta = zeta_even_exact(argument)
    if kind == ZETA:
        return zeta
    phi = phi_even_exact(argument)
    return zeta + phi if kind == ZETA_PLUS_PHI else zeta - phi


@dataclass(frozen=True)
class EvenReduction:
    params: RelationParams
    m: int
    tuples: tuple
    value: PiValue


def reduce_even(params, m, variants=PINNED_VARIANTS):
    """Return the exact sum of the six ζ₂ terms at s = 2m.

    The value is −(sum of all correction rows) with every zeta value at an
    even argument replaced by its rational multiple of a power of π.

    Raises:
        ValueError: If m < 1 or a zeta argument is not an even integer ≥ 2.

    Examples:
        >>> str(reduce_even((1, 1, 1, 1, 1), 1).value)
        '23/49650761160*pi^12'
    """
    params = _as_params(params)
    if int(m) != m or m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    m = int(m)
    table = build_correction_table(params, variants)
    total = PiPolynomial()
    for row in table.rows:
        argument = 2 * m + table.shift(row)
        if argument < 2 or argument % 2:
            raise ValueError(f"Row {row} needs zeta at {argument}, which is not an even integer >= 2")
        total = total + zeta_even_exact(2 * row.k) * _row_factor(row.kind, argument) * row.coefficient
    tuples = tuple(substitute(pattern, 2 * m) for pattern in lhs_zeta_tuples(params))
    return EvenReduction(params, m, tuples, (-total).as_value())


def weyl_orbit_value(params, m, algorithm="A"):
    """The six-term sum at s = 2m from the generating function.

    The six patterns are the distinct argument permutations induced by the
    Weyl group on (2p, 2m, 2q, 2r, 2u, 2v), each reached by two elements,
    so the sum is half the Weyl-symmetric sum.
    """
    p, q, r, u, v = _as_params(params).astuple()
    k = (2 * p, 2 * m, 2 * q, 2 * r, 2 * u, 2 * v)
    return weyl_sum_exact(k, (0, 0), algorithm).scale(Fraction(1, 2))


@dataclass
class RelationReport:
    """Numeric check of the relation at one real s.

    Attributes:
        params (RelationParams): The parameter vector.
        s: The free argument.
        six_terms (list): ``(argument tuple, NumericValue)`` for the six ζ₂ terms.
        part_values (dict): Part number → NumericValue of that correction part.
        residual: |Σ six ζ₂ + Σ parts|.
        tolerance: Combined error bounds plus a rounding allowance.
        largest_term: Largest magnitude among all summed terms.
        passed (bool): Residual within tolerance and within the relative tolerance.
    """

    params: RelationParams
    s: object
    six_terms: list
    part_values: dict
    residual: object
    tolerance: object
    largest_term: object
    passed: bool


def _check_poles(table, s, pole_distance):
    for row in table.rows:
        argument = s + table.shift(row)
        if abs(argument - 1) < pole_distance:
            raise SingularArgumentError(
                f"Correction row part={row.part} block={row.block} k={row.k} ({row.kind}) "
                f"needs zeta at {argument}, within {pole_distance} of the pole at 1"
            )


def check_relation(params, s, cfg=None):
    """Evaluate both sides of the relation numerically at a real s.

    Args:
        params: A RelationParams or a five-tuple.
        s: A real number.
        cfg (RelationConfig, optional): Summation settings, variants and tolerances.

    Returns:
        RelationReport: The residual with its tolerance.

    Raises:
        SingularArgumentError: If s + W₀ − 2k is within ``pole_distance`` of 1 for some row.
        ConvergenceDomainError: If a ζ₂ term fails the convergence condition.
    """
    params = _as_params(params)
    cfg = cfg if cfg is not None else RelationConfig()
    summation = cfg.summation
    table = build_correction_table(params, cfg.variants)
    dps = summation.working_precision
    with mp.workdps(dps + 10):
        exact = parse_rational(str(s))
        s_value = mp.mpf(exact.numerator) / exact.denominator
        _check_poles(table, s_value, cfg.pole_distance)

        six_terms = []
        for pattern in lhs_zeta_tuples(params):
            arguments = substitute(pattern, s_value)
            value = zeta2_numeric(arguments, summation)
            logger.debug("zeta2%s = %s", substitute(pattern, s), value)
            six_terms.append((substitute(pattern, s), value))

        zetas, phis = {}, {}
        part_values = {}
        magnitudes = [abs(value.value) for _, value in six_terms]
        for row in table.rows:
            argument = s_value + table.shift(row)
            if row.k not in zetas:
                zetas[row.k] = riemann_zeta_numeric(argument, summation)
                phis[row.k] = phi_numeric(argument, summation)
            zeta, phi = zetas[row.k], phis[row.k]
            if row.kind == ZETA:
                factor = zeta
            elif row.kind == ZETA_PLUS_PHI:
                factor = zeta + phi
            else:
                factor = zeta + phi.scale(-1)
            weight = zeta_even_exact(2 * row.k).scale(row.coefficient).to_decimal(dps)
            term = factor.scale(weight)
            logger.debug("part %s block %s k=%s: %s", row.part, row.block, row.k, term)
            magnitudes.append(abs(term.value))
            part_values[row.part] = term if row.part not in part_values else part_values[row.part] + term

        total = None
        for value in [value for _, value in six_terms] + list(part_values.values()):
            total = value if total is None else total + value
        residual = abs(total.value)
        tolerance = total.error_bound + mp.power(10, 3 - dps) * mp.fsum(magnitudes)
        largest = max(magnitudes)
        passed = bool(residual <= tolerance and residual <= cfg.relative_tolerance * largest)
    if not passed:
        logger.warning("relation %s fails at s=%s: residual %s > %s", params.astuple(), s, residual, tolerance)
    return RelationReport(params, s, six_terms, dict(sorted(part_values.items())), residual, tolerance, largest, passed)


class SingularHit(NamedTuple):
    """Family 1 or 2 with its l ≥ 0, or family 3 with ``l`` None."""

    family: int
    l: int | None = None


def singular_locus_check(s):
    """Report which singular hyperplane families contain the argument tuple.

    Family 1 is s₁+s₃+s₄+s₅+s₆ = 1−l and family 2 is s₂+s₃+s₄+s₅+s₆ = 1−l
    for an integer l ≥ 0. Family 3 is s₁+…+s₆ = 2. The test is exact.

    Examples:
        >>> singular_locus_check((0, 0, 0, 0, 0, 1))
        [SingularHit(family=1, l=0), SingularHit(family=2, l=0)]
    """
    s = tuple(parse_rational(value) for value in s)
    if len(s) != 6:
        raise ValueError(f"Expected 6 arguments, got {len(s)}")
    shared = sum(s[2:], Fraction(0))
    hits = []
    for family, lead in ((1, s[0]), (2, s[1])):
        l = 1 - (lead + shared)
        if l.denominator == 1 and l >= 0:
            hits.append(SingularHit(family, int(l)))
    if sum(s, Fraction(0)) == 2:
        hits.append(SingularHit(3))
    return hits


@dataclass(frozen=True)
class ZetaProductExpression:
    """Σ coefficient·∏ ζ(n) over a list of ``(coefficient, (n, …))`` terms."""

    terms: tuple

    def to_decimal(self, dps=30):
        with mp.workdps(dps + 10):
            total = mp.fsum(
                mp.mpf(c.numerator) / c.denominator * mp.fprod(mp.zeta(n) for n in arguments)
                for c, arguments in self.terms
            )
        return total

    def __str__(self):
        parts = []
        for coefficient, arguments in self.terms:
            factors = "*".join(f"zeta({n})" for n in arguments)
            sign = "-" if coefficient < 0 else "+"
            parts.append(f"{sign} {abs(coefficient)}*{factors}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def weight_seven_closed_form():
    """Return ζ₂(2,1,1,1,1,1) = −109/1296·ζ(7) + 1/18·ζ(2)ζ(5).

    Examples:
        >>> str(weight_seven_closed_form())
        '-109/1296*zeta(7) + 1/18*zeta(2)*zeta(5)'
    """
    return ZetaProductExpression(((Fraction(-109, 1296), (7,)), (Fraction(1, 18), (2, 5))))


def _finite_sequence(values):
    if isinstance(values, dict):
        return {int(index): parse_rational(value) for index, value in values.items()}
    return {index: parse_rational(value) for index, value in enumerate(values)}


def _i_pi_even(power, denominator):
    """(iπ)^{2·power}/denominator as a PiValue."""
    return PiValue(Fraction((-1) ** power, denominator), Fraction(0), 2 * power)


def verify_alternating_convolution(a, f, g):
    """Check the two convolution identities of φ against (iπ)^{2μ} kernels.

    With λ_ν = 1 for even ν and 0 for odd ν, both

        Σ_{k=0}^{a} φ(a−k)λ_{a−k} Σ_{μ ≤ k/2} f(k−2μ)(iπ)^{2μ}/(2μ)! = Σ_{ξ ≤ a/2} ζ(2ξ)f(a−2ξ)
        Σ_{k=1}^{a} φ(a−k)λ_{a−k} Σ_{μ ≤ (k−1)/2} g(k−2μ)(iπ)^{2μ}/(2μ+1)! = −g(a)/2

    are evaluated exactly as polynomials in π.

    Args:
        a (int): Positive integer.
        f, g: Finitely supported rational sequences, as lists or index dicts.

    Returns:
        bool: True iff both identities hold exactly.
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    f, g = _finite_sequence(f), _finite_sequence(g)
    first_left, second_left = PiPolynomial(), PiPolynomial()
    for k in range(a + 1):
        if (a - k) % 2:
            continue
        phi = phi_even_exact(a - k)
        inner = PiPolynomial()
        for mu in range(k // 2 + 1):
            inner = inner + _i_pi_even(mu, factorial(2 * mu)) * f.get(k - 2 * mu, Fraction(0))
        first_left = first_left + phi * inner
        if k >= 1:
            inner = PiPolynomial()
            for mu in range((k - 1) // 2 + 1):
                inner = inner + _i_pi_even(mu, factorial(2 * mu + 1)) * g.get(k - 2 * mu, Fraction(0))
            second_left = second_left + phi * inner
    first_right = PiPolynomial()
    for xi in range(a // 2 + 1):
        first_right = first_right + zeta_even_exact(2 * xi) * f.get(a - 2 * xi, Fraction(0))
    second_right = PiPolynomial.from_rational(-g.get(a, Fraction(0)) / 2)
    return first_left == first_right and second_left == second_right


def _even_indexed(values):
    sequence = _finite_sequence(values)
    if not isinstance(values, dict):
        return {2 * index: value for index, value in sequence.items()}
    odd = [index for index, value in sequence.items() if index % 2 and value]
    if odd:
        raise ValueError(f"R must be supported on even indices, got non-zero values at {odd}")
    return sequence


def verify_even_zeta_inversion(h_max, R):
    """Check the pair of inversion formulas between P and Q built from R.

    P_{2h} = Σ_j R_{2h−2j}(iπ)^{2j}/(2j)! and Q_{2h} = Σ_j R_{2h−2j}(iπ)^{2j}/(2j+1)!
    satisfy P_{2h} = −2Σ_τ ζ(2h−2τ)Q_{2τ} and
    Q_{2h} = (2/π²)Σ_τ (2^{2h−2τ+2}−1)ζ(2h−2τ+2)P_{2τ} for every h ≤ h_max.

    Args:
        h_max (int): Largest h checked.
        R: Dict from even index to rational, or a list read as R₀, R₂, R₄, ….

    Returns:
        bool: True iff both formulas hold exactly for all h.
    """
    if h_max < 0:
        raise ValueError(f"h_max must be >= 0, got {h_max}")
    R = _even_indexed(R)
    P, Q = [], []
    for h in range(h_max + 1):
        p_value, q_value = PiPolynomial(), PiPolynomial()
        for j in range(h + 1):
            r = R.get(2 * h - 2 * j, Fraction(0))
            p_value = p_value + _i_pi_even(j, factorial(2 * j)) * r
            q_value = q_value + _i_pi_even(j, factorial(2 * j + 1)) * r
        P.append(p_value)
        Q.append(q_value)
    for h in range(h_max + 1):
        from_q = PiPolynomial()
        from_p = PiPolynomial()
        for tau in range(h + 1):
            from_q = from_q + zeta_even_exact(2 * h - 2 * tau) * Q[tau] * -2
            zeta = zeta_even_exact(2 * h - 2 * tau + 2)
            reduced = PiValue(zeta.real * 2 * (2 ** (2 * h - 2 * tau + 2) - 1), Fraction(0), zeta.pi_power - 2)
            from_p = from_p + reduced * P[tau]
        if P[h] != from_q or Q[h] != from_p:
            logger.debug("inversion fails at h=%s", h)
            return False
    return True
