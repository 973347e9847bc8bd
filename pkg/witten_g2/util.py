"""Utility classes and helpers shared across the package.

Classes:
    GradedMapping: Mapping from an integer grade to a value that never stores zeros

Features:
    - Zero-dropping storage, so two mappings compare equal iff their non-zero grades agree
    - Sorted grade iteration for deterministic output
    - Rational parsing and ``"p/q"`` formatting used by the command line surface
"""

from collections.abc import MutableMapping
from decimal import Decimal, InvalidOperation
from fractions import Fraction


class GradedMapping(MutableMapping):
    """Mapping keyed by an integer grade whose zero values are never stored.

    Used for π-power graded exact values and for per-degree layers of
    multivariate series. Assigning a value equal to ``zero`` removes the key.

    Args:
        mapping (dict, optional): Initial mapping data.
        zero: The value treated as absent. Defaults to ``0``.
    """

    def __init__(self, mapping=None, zero=0):
        self.zero = zero
        self.data = {}
        for key, value in (dict(mapping) if mapping else {}).items():
            self[key] = value

    def __getitem__(self, key):
        return self.data[key]

    def __setitem__(self, key, value):
        if not isinstance(key, int):
            raise TypeError(f"Grades must be integers, got {type(key)}")
        if value == self.zero:
            self.data.pop(key, None)
        else:
            self.data[key] = value

    def __delitem__(self, key):
        del self.data[key]

    def __iter__(self):
        return iter(sorted(self.data))

    def __len__(self):
        return len(self.data)

    def __repr__(self):
        return f"{type(self).__name__}({dict(sorted(self.data.items()))!r})"

    def grades(self):
        """Return the stored grades in increasing order."""
        return sorted(self.data)


def parse_rational(value):
    """Parse an exact rational from ``"p/q"``, an integer or a finite decimal.

    Args:
        value: A ``str``, ``int``, ``Fraction`` or ``Decimal``.

    Returns:
        Fraction: The exact value.

    Raises:
        ValueError: If the text is not a rational literal.
        TypeError: If ``value`` is a float or another unsupported type.

    Examples:
        >>> parse_rational("1/3")
        Fraction(1, 3)
        >>> parse_rational("0.25")
        Fraction(1, 4)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"Expected an exact rational, got {type(value)}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"Not a finite rational: {value}")
        return Fraction(value)
    if not isinstance(value, str):
        raise TypeError(f"Expected str, int or Fraction, got {type(value)}")
    text = value.strip()
    try:
        if "/" in text:
            numerator, denominator = text.split("/", 1)
            return Fraction(int(numerator), int(denominator))
        decimal_value = Decimal(text)
    except (ValueError, ZeroDivisionError, InvalidOperation):
        raise ValueError(f"Not a rational literal: {value!r}") from None
    if not decimal_value.is_finite():
        raise ValueError(f"Not a finite rational: {value!r}")
    return Fraction(decimal_value)


def format_rational(value):
    """Format a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_int_tuple(text, length=None):
    """Parse a comma separated list of integers.

    Raises:
        ValueError: On non-integer items or a length mismatch.
    """
    try:
        values = tuple(int(item) for item in text.split(","))
    except ValueError:
        raise ValueError(f"Expected comma separated integers, got {text!r}") from None
    if length is not None and len(values) != length:
        raise ValueError(f"Expected {length} integers, got {len(values)}")
    return values
