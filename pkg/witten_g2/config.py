"""Validated configuration models.

Classes:
    SummationConfig: Cutoff, precision and engine for the double series
    RelationConfig: Tolerances and correction-table variants for relation checks
    Settings: Command line defaults with environment overrides
"""

import os
from typing import ClassVar, Literal

import pydantic

PINNED_VARIANTS = frozenset(
    {
        "part2.zeta.omega_limit",
        "part4.zeta.final_binomial",
        "part5.minus.rho_limit",
        "part6.shifted.power_of_three",
    }
)


class SummationConfig(pydantic.BaseModel):
    """How the rectangle sums of the double series are evaluated.

    Attributes:
        limit: Summation cutoff N for both m and n.
        working_precision: Significant decimal digits for mpmath work.
        tail_estimation: Whether the tail bound is added to the error bound.
        engine: ``mpmath``, ``numpy`` (float64) or ``auto``.
        mpmath_limit: Largest N that ``auto`` still sums with mpmath.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    limit: int = pydantic.Field(default=4000, ge=16)
    working_precision: int = pydantic.Field(default=25, ge=15)
    tail_estimation: bool = True
    engine: Literal["auto", "mpmath", "numpy"] = "auto"
    mpmath_limit: int = pydantic.Field(default=500, ge=16)

    def resolved_engine(self):
        if self.engine != "auto":
            return self.engine
        return "mpmath" if self.limit <= self.mpmath_limit else "numpy"


class RelationConfig(pydantic.BaseModel):
    """Settings for numeric checks of the functional relation."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    summation: SummationConfig = SummationConfig()
    variants: frozenset[str] = PINNED_VARIANTS
    pole_distance: float = pydantic.Field(default=1e-6, gt=0)
    relative_tolerance: float = pydantic.Field(default=1e-6, gt=0)


class Settings(pydantic.BaseModel):
    """Command line defaults.

    Each field can be overridden through ``WITTEN_G2_<FIELD>`` in the
    environment, read by :meth:`from_env`.
    """

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    ENV_PREFIX: ClassVar[str] = "WITTEN_G2_"

    limit: int = pydantic.Field(default=4000, ge=16)
    precision: int = pydantic.Field(default=25, ge=15)
    algorithm: Literal["A", "B"] = "A"
    cross_check_degree: int = pydantic.Field(default=10, ge=0)

    @classmethod
    def from_env(cls, environ=None):
        """Build settings from ``WITTEN_G2_*`` variables.

        Raises:
            pydantic.ValidationError: If an override does not validate.
        """
        environ = os.environ if environ is None else environ
        overrides = {}
        for name in cls.model_fields:
            key = f"{cls.ENV_PREFIX}{name.upper()}"
            if key in environ:
                overrides[name] = environ[key]
        return cls(**overrides)

    def summation(self, limit=None, precision=None, **changes):
        """Return a SummationConfig from these defaults, overriding ``limit`` and ``precision`` when given."""
        return SummationConfig(
            limit=self.limit if limit is None else limit,
            working_precision=self.precision if precision is None else precision,
            **changes,
        )
