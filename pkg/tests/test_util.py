"""Tests for util module."""

from decimal import Decimal
from fractions import Fraction

import pytest

from witten_g2.util import GradedMapping, format_rational, parse_int_tuple, parse_rational


class TestGradedMapping:
    """Test the GradedMapping class."""

    def test_init_empty(self):
        """Test initialization with no mapping."""
        mapping = GradedMapping()
        assert len(mapping) == 0
        assert mapping.data == {}

    def test_init_with_mapping(self):
        """Test initialization with initial mapping."""
        mapping = GradedMapping({2: "a", 0: "b"})
        assert len(mapping) == 2
        assert mapping.data == {2: "a", 0: "b"}

    def test_init_drops_zeros(self):
        """Zero values given at construction are not stored."""
        mapping = GradedMapping({1: 5, 2: 0})
        assert mapping.data == {1: 5}

    def test_setitem_and_getitem(self):
        """Test setting and getting items."""
        mapping = GradedMapping()
        mapping[3] = Fraction(1, 2)
        assert mapping[3] == Fraction(1, 2)

    def test_setitem_zero_removes_key(self):
        """Assigning the zero value removes the grade."""
        mapping = GradedMapping({4: 7})
        mapping[4] = 0
        assert 4 not in mapping
        assert len(mapping) == 0

    def test_custom_zero(self):
        """A custom zero value is dropped like 0."""
        mapping = GradedMapping(zero={})
        mapping[1] = {}
        mapping[2] = {"x": 1}
        assert mapping.grades() == [2]

    def test_delitem(self):
        """Test deleting items."""
        mapping = GradedMapping({1: "a", 2: "b"})
        del mapping[1]
        assert len(mapping) == 1
        assert 1 not in mapping.data

    def test_iter_is_sorted(self):
        """Iteration follows increasing grade."""
        mapping = GradedMapping({5: "e", -1: "z", 2: "b"})
        assert list(mapping) == [-1, 2, 5]

    def test_non_integer_key(self):
        """Non-integer grades are rejected."""
        mapping = GradedMapping()
        with pytest.raises(TypeError, match="Grades must be integers"):
            mapping["a"] = 1

    def test_equality_ignores_zero_assignments(self):
        """Two mappings are equal iff their non-zero grades agree."""
        left = GradedMapping({1: 2})
        right = GradedMapping({1: 2, 3: 0})
        assert left == right

    def test_repr(self):
        """Test string representation."""
        assert repr(GradedMapping({2: 1, 1: 3})) == "GradedMapping({1: 3, 2: 1})"


class TestParseRational:
    """Test parse_rational."""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1/3", Fraction(1, 3)),
            ("-4/6", Fraction(-2, 3)),
            ("0.25", Fraction(1, 4)),
            ("7", Fraction(7)),
            (" 2 ", Fraction(2)),
        ],
    )
    def test_strings(self, text, expected):
        """Fractions, decimals and integers parse exactly."""
        assert parse_rational(text) == expected

    def test_exact_types(self):
        """Integers, Fractions and Decimals pass through exactly."""
        assert parse_rational(3) == Fraction(3)
        assert parse_rational(Fraction(1, 7)) == Fraction(1, 7)
        assert parse_rational(Decimal("0.125")) == Fraction(1, 8)

    def test_float_rejected(self):
        """Floats are not exact rationals."""
        with pytest.raises(TypeError):
            parse_rational(0.5)

    @pytest.mark.parametrize("text", ["abc", "1/0", "inf", "1/x"])
    def test_malformed(self, text):
        """Malformed literals raise ValueError."""
        with pytest.raises(ValueError):
            parse_rational(text)


class TestFormatting:
    """Test format_rational and parse_int_tuple."""

    def test_format_rational(self):
        """Denominators of 1 are dropped."""
        assert format_rational(Fraction(23, 297904566960)) == "23/297904566960"
        assert format_rational(Fraction(-4, 2)) == "-2"
        assert format_rational(5) == "5"

    def test_parse_int_tuple(self):
        """Comma separated integers parse into a tuple."""
        assert parse_int_tuple("2,4,4,4,2,2", 6) == (2, 4, 4, 4, 2, 2)

    def test_parse_int_tuple_length(self):
        """A length mismatch is an error."""
        with pytest.raises(ValueError, match="Expected 6 integers"):
            parse_int_tuple("1,2,3", 6)

    def test_parse_int_tuple_garbage(self):
        """Non-integer items are an error."""
        with pytest.raises(ValueError, match="comma separated integers"):
            parse_int_tuple("1,a")
