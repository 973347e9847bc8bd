"""Test configuration and fixtures for witten_g2 package tests."""

from fractions import Fraction

import mpmath as mp
import numpy as np
import pytest

from witten_g2.algebra import PiValue
from witten_g2.config import RelationConfig, SummationConfig
from witten_g2.relations import RelationParams

# ζ₂ values at orbit tuples, as (coefficient, power of π)
ORBIT_VALUES = {
    (2, 2, 2, 2, 2, 2): (Fraction(23, 297904566960), 12),
    (2, 4, 4, 4, 2, 2): (Fraction(467, 213955059990672000), 18),
    (4, 2, 2, 2, 4, 4): (Fraction(20771, 106061802338575923840), 18),
}

RELATION_PARAMS = [
    (1, 1, 1, 1, 1),
    (2, 1, 1, 1, 1),
    (1, 2, 1, 1, 1),
    (1, 1, 2, 1, 1),
    (1, 1, 1, 2, 1),
    (1, 1, 1, 1, 2),
]


@pytest.fixture
def zeta2_all_twos():
    """Exact ζ₂(2, 2, 2, 2, 2, 2)."""
    coefficient, power = ORBIT_VALUES[(2,) * 6]
    return PiValue(coefficient, Fraction(0), power)


@pytest.fixture
def mpmath_summation():
    """Small cutoff summed with mpmath."""
    return SummationConfig(limit=120, working_precision=30, engine="mpmath")


@pytest.fixture
def numpy_summation():
    """Medium cutoff summed in float64."""
    return SummationConfig(limit=1000, engine="numpy")


@pytest.fixture
def relation_config(numpy_summation):
    """Relation checks on the float64 engine with the pinned variants."""
    return RelationConfig(summation=numpy_summation)


@pytest.fixture
def unit_params():
    """p = q = r = u = v = 1."""
    return RelationParams.of(1, 1, 1, 1, 1)


@pytest.fixture
def rng():
    """Seeded generator for randomized exact checks."""
    return np.random.default_rng(7)


def random_rationals(rng, length, low=-9, high=10):
    """Random small rationals from a numpy generator."""
    numerators = rng.integers(low, high, length)
    denominators = rng.integers(1, 12, length)
    return [Fraction(int(n), int(d)) for n, d in zip(numerators, denominators)]


def close(value, target, tolerance):
    """|value − target| ≤ tolerance, all converted to mpf."""
    return abs(mp.mpf(value) - mp.mpf(target)) <= tolerance
