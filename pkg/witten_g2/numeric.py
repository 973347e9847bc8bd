"""Numerical evaluation of the G₂ double series and the zeta functions it needs.

ζ₂(s, y) = Σ_{m,n ≥ 1} e^{2πi(m y₁ + n y₂)} / (m^{s₁} n^{s₂} (m+n)^{s₃} (m+2n)^{s₄} (m+3n)^{s₅} (2m+3n)^{s₆})

is summed over the square 1 ≤ m, n ≤ N. The remainder is bounded by
comparison with one-dimensional tails. Two engines exist: mpmath at the
configured precision and a row-vectorized float64 numpy engine for large N.

Classes:
    NumericValue: A value with an absolute error bound
    ConvergenceDomainError: Arguments outside the region where the series is summed
"""

import logging
from fractions import Fraction
from math import lcm, log2

import mpmath as mp
import numpy as np

from witten_g2.algebra import bernoulli_number
from witten_g2.config import SummationConfig
from witten_g2.root_system import (
    delta_w,
    induced_argument_permutation,
    inverse,
    k_constant,
    weyl_action_on_y,
    weyl_group,
)

logger = logging.getLogger("witten_g2.numeric")

# coefficients (of m, of n) of the six linear factors
LINEAR_FACTORS = ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3))

THETA_SAMPLES = 64


class ConvergenceDomainError(ValueError):
    """The arguments fail the sufficient convergence condition."""


class NumericValue:
    """A real or complex value with an absolute error bound."""

    def __init__(self, value, error_bound):
        self.value = value
        self.error_bound = mp.mpf(error_bound)
        if not mp.isfinite(self.error_bound) or self.error_bound < 0:
            raise ValueError(f"error_bound must be finite and >= 0, got {error_bound}")

    @property
    def real(self):
        return mp.re(self.value)

    @property
    def imag(self):
        return mp.im(self.value)

    def __add__(self, other):
        return NumericValue(self.value + other.value, self.error_bound + other.error_bound)

    def scale(self, factor):
        factor = mp.mpf(factor) if not isinstance(factor, mp.mpc) else factor
        return NumericValue(self.value * factor, self.error_bound * abs(factor))

    def contains(self, target, slack=0):
        """True if |value − target| ≤ error_bound + slack."""
        return abs(self.value - target) <= self.error_bound + slack

    def __repr__(self):
        return f"NumericValue({mp.nstr(self.value, 20)}, error_bound={mp.nstr(self.error_bound, 5)})"


def _config(cfg):
    return cfg if cfg is not None else SummationConfig()


def _as_mpf(value):
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def check_convergence(s):
    """Validate the sufficient convergence condition of the double series.

    Requires all s_j ≥ 0, s₁+s₃+…+s₆ > 1, s₂+s₃+…+s₆ > 1 and Σs_j > 2.

    Raises:
        ConvergenceDomainError: Naming the failed inequality.
    """
    s = tuple(s)
    if len(s) != 6:
        raise ConvergenceDomainError(f"Expected 6 arguments, got {len(s)}")
    if min(s) < 0:
        raise ConvergenceDomainError(f"All arguments must be >= 0, got {s}")
    shared = sum(s[2:])
    if s[0] + shared <= 1:
        raise ConvergenceDomainError(f"s1+s3+s4+s5+s6 = {s[0] + shared} must exceed 1")
    if s[1] + shared <= 1:
        raise ConvergenceDomainError(f"s2+s3+s4+s5+s6 = {s[1] + shared} must exceed 1")
    if sum(s) <= 2:
        raise ConvergenceDomainError(f"s1+...+s6 = {sum(s)} must exceed 2")


def _region_bound(a, b, c, limit):
    """Bound the part of the series with first index > limit.

    Uses (m+n)^{-c} ≤ m^{-θc} n^{-(1-θ)c} and minimizes over feasible θ.
    """
    if c == 0:
        return mp.zeta(b) * mp.power(limit, 1 - a) / (a - 1)
    lower = max(mp.mpf(0), (1 - a) / c)
    upper = min(mp.mpf(1), (b + c - 1) / c)
    best = mp.inf
    for i in range(THETA_SAMPLES):
        theta = lower + (upper - lower) * (i + mp.mpf(1) / 2) / THETA_SAMPLES
        exponent = a + theta * c
        other = b + (1 - theta) * c
        if exponent <= 1 or other <= 1:
            continue
        best = min(best, mp.zeta(other) * mp.power(limit, 1 - exponent) / (exponent - 1))
    return best


def tail_bound(s, limit):
    """Upper bound on the terms of the untwisted series outside the N×N square."""
    check_convergence(s)
    s = [_as_mpf(value) for value in s]
    a, b, c = s[0], s[1], sum(s[2:])
    return _region_bound(a, b, c, limit) + _region_bound(b, a, c, limit)


def _phase_data(y):
    y1, y2 = (Fraction(component) for component in y)
    modulus = lcm(y1.denominator, y2.denominator)
    return int(y1 * modulus), int(y2 * modulus), modulus


def _rectangle_mpmath(s, y, limit, dps):
    first, second, modulus = _phase_data(y)
    with mp.workdps(dps + 5):
        exponents = [_as_mpf(value) for value in s]
        size = 5 * limit + 1
        tables = [
            [mp.mpf(0)] + [mp.power(v, -exponent) for v in range(1, size)] if exponent else None
            for exponent in exponents
        ]
        phases = [mp.expjpi(mp.mpf(2 * j) / modulus) for j in range(modulus)] if modulus > 1 else None
        real_rows, imag_rows, magnitude_rows = [], [], []
        for m in range(1, limit + 1):
            row = []
            for n in range(1, limit + 1):
                term = mp.mpf(1)
                for table, (cm, cn) in zip(tables, LINEAR_FACTORS):
                    if table is not None:
                        term *= table[cm * m + cn * n]
                row.append((term, (m * first + n * second) % modulus))
            magnitude_rows.append(mp.fsum(term for term, _ in row))
            if phases is None:
                real_rows.append(magnitude_rows[-1])
            else:
                real_rows.append(mp.fsum(term * mp.re(phases[index]) for term, index in row))
                imag_rows.append(mp.fsum(term * mp.im(phases[index]) for term, index in row))
        real = mp.fsum(real_rows)
        value = real if phases is None else mp.mpc(real, mp.fsum(imag_rows))
        magnitude = mp.fsum(magnitude_rows)
        rounding = mp.mpf(limit) ** 2 * mp.power(10, 1 - dps) * magnitude
    return value, rounding


def _rectangle_numpy(s, y, limit):
    first, second, modulus = _phase_data(y)
    size = 5 * limit + 1
    values = np.arange(size, dtype=np.float64)
    values[0] = 1.0
    tables = [np.power(values, -float(exponent)) if exponent else None for exponent in s]
    n = np.arange(1, limit + 1)
    phases = None
    if modulus > 1:
        phases = np.array([complex(mp.expjpi(mp.mpf(2 * j) / modulus)) for j in range(modulus)])
    rows = np.zeros(limit, dtype=np.complex128 if phases is not None else np.float64)
    magnitudes = np.zeros(limit, dtype=np.float64)
    for m in range(1, limit + 1):
        terms = np.ones(limit, dtype=np.float64)
        for table, (cm, cn) in zip(tables, LINEAR_FACTORS):
            if table is not None:
                terms *= table[cm * m + cn * n]
        magnitudes[m - 1] = np.sum(terms)
        if phases is None:
            rows[m - 1] = magnitudes[m - 1]
        else:
            rows[m - 1] = np.sum(terms * phases[(m * first + n * second) % modulus])
    total = np.sum(rows)
    magnitude = float(np.sum(magnitudes))
    rounding = (20 + 2 * log2(limit)) * np.finfo(np.float64).eps * magnitude
    value = mp.mpf(float(total)) if phases is None else mp.mpc(complex(total))
    return value, mp.mpf(rounding)


def zeta2_numeric_twisted(s, y, cfg=None):
    """Evaluate ζ₂(s, y) with the phase e^{2πi(m y₁ + n y₂)} at a rational y.

    The tail bound is that of the untwisted series, which dominates.

    Args:
        s (tuple): Six non-negative reals.
        y (tuple): Two rationals.
        cfg (SummationConfig, optional): Summation settings.

    Returns:
        NumericValue: Complex unless y is integral.

    Raises:
        ConvergenceDomainError: If ``s`` fails the convergence condition.
    """
    cfg = _config(cfg)
    check_convergence(s)
    engine = cfg.resolved_engine()
    if engine == "mpmath":
        value, rounding = _rectangle_mpmath(s, y, cfg.limit, cfg.working_precision)
    else:
        if cfg.working_precision > 15:
            logger.info("float64 engine at N=%s; error bound reflects double precision", cfg.limit)
        value, rounding = _rectangle_numpy(s, y, cfg.limit)
    error = rounding
    if cfg.tail_estimation:
        with mp.workdps(cfg.working_precision):
            error += tail_bound(s, cfg.limit)
    return NumericValue(value, error)


def zeta2_numeric(s, cfg=None):
    """Evaluate ζ₂(s) as a real NumericValue.

    Examples:
        >>> value = zeta2_numeric((2, 2, 2, 2, 2, 2), SummationConfig(limit=64))
    """
    return zeta2_numeric_twisted(s, (0, 0), cfg)


def riemann_zeta_numeric(s, cfg=None):
    """Riemann ζ(s) for real s > 0, s ≠ 1, by Euler–Maclaurin summation.

    The error bound is twice the first omitted correction term plus rounding.

    Raises:
        ValueError: If s ≤ 0 or s = 1.
    """
    cfg = _config(cfg)
    dps = cfg.working_precision
    with mp.workdps(dps + 10):
        s = _as_mpf(s)
        if s <= 0:
            raise ValueError(f"s must be > 0, got {s}")
        if s == 1:
            raise ValueError("zeta has a pole at s = 1")
        cutoff = 2 * dps + int(s) + 10
        order = dps // 2 + 5
        head = mp.fsum(mp.power(n, -s) for n in range(1, cutoff))
        value = head + mp.power(cutoff, 1 - s) / (s - 1) + mp.power(cutoff, -s) / 2
        rising = s
        corrections = []
        for j in range(1, order + 2):
            b = bernoulli_number(2 * j)
            term = mp.mpf(b.numerator) / b.denominator / mp.factorial(2 * j) * rising * mp.power(cutoff, -s - 2 * j + 1)
            corrections.append(term)
            rising *= (s + 2 * j - 1) * (s + 2 * j)
        value += mp.fsum(corrections[:-1])
        error = 2 * abs(corrections[-1]) + mp.power(10, -dps) * abs(value)
    return NumericValue(value, error)


def phi_numeric(s, cfg=None):
    """φ(s) = Σ (−1)ⁿ n^{−s} = (2^{1−s} − 1)·ζ(s); φ(1) = −log 2."""
    cfg = _config(cfg)
    with mp.workdps(cfg.working_precision + 10):
        s = _as_mpf(s)
        if s <= 0:
            raise ValueError(f"s must be > 0, got {s}")
        if s == 1:
            return NumericValue(-mp.log(2), mp.power(10, -cfg.working_precision))
        factor = mp.power(2, 1 - s) - 1
        zeta = riemann_zeta_numeric(s, cfg)
        return NumericValue(factor * zeta.value, abs(factor) * zeta.error_bound)


def weyl_sum_numeric(k, y=(0, 0), cfg=None):
    """Evaluate S(k, y) = Σ_w sign(w)·ζ₂(w⁻¹k, w⁻¹y) numerically.

    sign(w) = ∏_{α ∈ Δ_{w⁻¹}} (−1)^{k_α}.

    Raises:
        ValueError: If an entry of k is not an integer ≥ 1.
    """
    k = tuple(k)
    if len(k) != 6 or any(not isinstance(entry, int) or entry < 1 for entry in k):
        raise ValueError(f"k must be six integers >= 1, got {k}")
    total = None
    for w in weyl_group():
        w_inverse = inverse(w)
        sign = (-1) ** sum(k[j - 1] for j in delta_w(w_inverse))
        term = zeta2_numeric_twisted(
            induced_argument_permutation(w, k), weyl_action_on_y(w_inverse, y), cfg
        ).scale(sign)
        total = term if total is None else total + term
    return total


def witten_numeric(s, cfg=None):
    """Evaluate ζ_W(s) = K^s·ζ₂(s, …, s) for real s.

    Raises:
        ConvergenceDomainError: If (s, …, s) fails the convergence condition.
    """
    value = zeta2_numeric((s,) * 6, cfg)
    with mp.workdps(_config(cfg).working_precision + 10):
        factor = mp.power(k_constant(), _as_mpf(s))
    return value.scale(factor)
