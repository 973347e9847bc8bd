"""Tests for root_system module."""

from collections import Counter
from fractions import Fraction

import pytest

from witten_g2.root_system import (
    POSITIVE_ROOTS,
    WeylElement,
    admissible_orbit_tuple,
    compose,
    delta_w,
    induced_argument_permutation,
    inverse,
    k_constant,
    length_classes,
    longest_element,
    positive_roots,
    simple_reflection,
    weyl_action_on_y,
    weyl_group,
)


class TestRoots:
    """Test the positive roots and coroots."""

    def test_positive_roots(self):
        """Six roots in the fixed index order."""
        assert [tuple(root) for root, _ in positive_roots()] == [(1, 0), (0, 1), (3, 1), (3, 2), (1, 1), (2, 1)]
        assert [tuple(coroot) for _, coroot in positive_roots()] == [
            (1, 0),
            (0, 1),
            (1, 1),
            (1, 2),
            (1, 3),
            (2, 3),
        ]

    def test_length_classes(self):
        """Roots 1, 5, 6 are short and 2, 3, 4 are long."""
        short, long = length_classes()
        assert short == {1, 5, 6}
        assert long == {2, 3, 4}

    def test_k_constant(self):
        """K(G₂) = 1·1·2·3·4·5."""
        assert k_constant() == 120


class TestSimpleReflections:
    """Test the simple reflections."""

    def test_sigma1_on_alpha1(self):
        """σ₁α₁ = −α₁."""
        assert simple_reflection(1).apply_root(1) == (1, -1)

    def test_sigma1_on_alpha2(self):
        """σ₁α₂ = 3α₁ + α₂ = α₃."""
        assert simple_reflection(1).apply_root(2) == (3, 1)

    def test_sigma2_on_alpha1(self):
        """σ₂α₁ = α₁ + α₂ = α₅."""
        assert simple_reflection(2).apply_root(1) == (5, 1)

    def test_involution(self):
        """σᵢ∘σᵢ is the identity."""
        identity = weyl_group()[0]
        for i in (1, 2):
            assert compose(simple_reflection(i), simple_reflection(i)) == identity

    @pytest.mark.parametrize("i", [0, 3])
    def test_invalid_index(self, i):
        """Only σ₁ and σ₂ exist."""
        with pytest.raises(ValueError, match="must be 1 or 2"):
            simple_reflection(i)

    def test_invalid_word(self):
        """Words may only use generators 1 and 2."""
        with pytest.raises(ValueError, match="must be 1 or 2"):
            WeylElement.from_word((1, 3))


class TestWeylGroup:
    """Test the twelve group elements."""

    def test_order(self):
        """W(G₂) is dihedral of order 12."""
        elements = weyl_group()
        assert len(elements) == 12
        assert len({element.root_matrix for element in elements}) == 12

    def test_canonical_order(self):
        """Elements are sorted by word length, identity first."""
        elements = weyl_group()
        assert str(elements[0]) == "e"
        lengths = [element.length for element in elements]
        assert lengths == sorted(lengths)
        assert Counter(lengths) == {0: 1, 1: 2, 2: 2, 3: 2, 4: 2, 5: 2, 6: 1}

    def test_perm_is_signed_permutation(self):
        """Every element permutes the six roots up to sign."""
        for element in weyl_group():
            assert sorted(index for index, _ in element.perm) == [1, 2, 3, 4, 5, 6]

    def test_longest_element(self):
        """The longest element sends every positive root to a negative one."""
        w0 = longest_element()
        assert w0.length == 6
        assert all(sign == -1 for _, sign in w0.perm)
        assert delta_w(w0) == {1, 2, 3, 4, 5, 6}

    def test_delta_size_is_length(self):
        """|Δ_w| equals the length of w."""
        for element in weyl_group():
            assert len(delta_w(element)) == element.length

    def test_delta_simple(self):
        """σᵢ makes only αᵢ negative."""
        assert delta_w(simple_reflection(1)) == {1}
        assert delta_w(simple_reflection(2)) == {2}

    def test_inverse(self):
        """w∘w⁻¹ is the identity."""
        identity = weyl_group()[0]
        for element in weyl_group():
            assert compose(element, inverse(element)) == identity

    def test_preserves_lengths(self):
        """Short roots go to short roots."""
        short, _ = length_classes()
        for element in weyl_group():
            for j in short:
                assert element.apply_root(j)[0] in short


class TestInducedPermutation:
    """Test induced_argument_permutation."""

    def test_identity(self):
        """The identity leaves s alone."""
        s = (1, 2, 3, 4, 5, 6)
        assert induced_argument_permutation(weyl_group()[0], s) == s

    def test_sigma1(self):
        """σ₁ swaps α₂↔α₃ and α₅↔α₆ up to sign."""
        assert induced_argument_permutation(simple_reflection(1), "abcdef") == ("a", "c", "b", "d", "f", "e")

    def test_composition_law(self):
        """Permuting by w∘v equals permuting by w, then by v."""
        s = ("s1", "s2", "s3", "s4", "s5", "s6")
        for w in weyl_group():
            for v in weyl_group():
                assert induced_argument_permutation(compose(w, v), s) == induced_argument_permutation(
                    v, induced_argument_permutation(w, s)
                )

    def test_wrong_length(self):
        """Six arguments are required."""
        with pytest.raises(ValueError, match="Expected 6 arguments"):
            induced_argument_permutation(weyl_group()[0], (1, 2, 3))


class TestWeylActionOnY:
    """Test weyl_action_on_y."""

    def test_identity(self):
        """The identity fixes y."""
        assert weyl_action_on_y(weyl_group()[0], (Fraction(1, 2), Fraction(1, 3))) == (Fraction(1, 2), Fraction(1, 3))

    def test_sigma1(self):
        """σ₁ sends (y₁, y₂) to (y₂ − y₁, y₂)."""
        assert weyl_action_on_y(simple_reflection(1), ("1/2", "1/3")) == (Fraction(-1, 6), Fraction(1, 3))

    def test_sigma2(self):
        """σ₂ sends (y₁, y₂) to (y₁, 3y₁ − y₂)."""
        assert weyl_action_on_y(simple_reflection(2), (1, 2)) == (1, 1)

    def test_group_action(self):
        """(w∘v)·y = w·(v·y)."""
        y = (Fraction(1, 5), Fraction(2, 7))
        for w in weyl_group():
            for v in weyl_group():
                assert weyl_action_on_y(compose(w, v), y) == weyl_action_on_y(w, weyl_action_on_y(v, y))


class TestAdmissible:
    """Test admissible_orbit_tuple."""

    @pytest.mark.parametrize(
        "k, expected",
        [
            ((2, 2, 2, 2, 2, 2), True),
            ((2, 4, 4, 4, 2, 2), True),
            ((4, 2, 2, 2, 4, 4), True),
            ((2, 2, 2, 2, 2, 4), False),
            ((1, 1, 1, 1, 1, 1), False),
            ((2, 2, 2, 2, 2), False),
        ],
    )
    def test_examples(self, k, expected):
        """Even and constant on each root-length class."""
        assert admissible_orbit_tuple(k) is expected

    def test_roots_are_distinct(self):
        """Positive roots are pairwise distinct."""
        assert len(set(POSITIVE_ROOTS)) == 6
