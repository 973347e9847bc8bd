"""The G₂ root system and its Weyl group.

Roots are written in the basis of simple roots (α₁ short, α₂ long) and
coroots in the basis of simple coroots. The Cartan pairings are
⟨α₂, α₁∨⟩ = −3 and ⟨α₁, α₂∨⟩ = −1.

Classes:
    Root: Integer coordinates of a root
    Coroot: Integer coordinates of a coroot
    WeylElement: An element of W(G₂) with its actions on roots and coroots

Features:
    - The six positive roots and coroots in a fixed index order
    - The 12 Weyl group elements in breadth-first canonical order
    - Induced permutations of argument tuples, inversion sets and the y-action
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import prod
from typing import NamedTuple


class Root(NamedTuple):
    c1: int
    c2: int


class Coroot(NamedTuple):
    d1: int
    d2: int


POSITIVE_ROOTS = (Root(1, 0), Root(0, 1), Root(3, 1), Root(3, 2), Root(1, 1), Root(2, 1))
POSITIVE_COROOTS = (Coroot(1, 0), Coroot(0, 1), Coroot(1, 1), Coroot(1, 2), Coroot(1, 3), Coroot(2, 3))

SHORT_ROOTS = frozenset({1, 5, 6})
LONG_ROOTS = frozenset({2, 3, 4})

# σᵢ on root coordinates, then on coroot coordinates; matrix columns are images of basis vectors
SIMPLE_ROOT_MATRICES = {
    1: ((-1, 3), (0, 1)),
    2: ((1, 0), (1, -1)),
}
SIMPLE_COROOT_MATRICES = {
    1: ((-1, 1), (0, 1)),
    2: ((1, 0), (3, -1)),
}

IDENTITY = ((1, 0), (0, 1))


def _matmul(left, right):
    return tuple(
        tuple(sum(left[i][k] * right[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _apply(matrix, vector):
    return tuple(matrix[i][0] * vector[0] + matrix[i][1] * vector[1] for i in range(2))


def _root_index(vector):
    """Return (index, sign) with vector = sign·α_index."""
    vector = tuple(vector)
    for j, root in enumerate(POSITIVE_ROOTS, start=1):
        if vector == tuple(root):
            return j, 1
        if vector == (-root.c1, -root.c2):
            return j, -1
    raise ValueError(f"{vector} is not a root of G2")


@dataclass(frozen=True)
class WeylElement:
    """An element of the Weyl group of G₂.

    Attributes:
        word (tuple): Canonical generator word; ``(1, 2)`` means σ₁∘σ₂.
        root_matrix (tuple): Action on root coordinates.
        matrix (tuple): Action on coroot coordinates (y₁, y₂).
        perm (tuple): Six ``(index, sign)`` pairs with w·αⱼ = sign·α_index.
    """

    word: tuple
    root_matrix: tuple
    matrix: tuple
    perm: tuple

    @classmethod
    def from_word(cls, word):
        root_matrix = IDENTITY
        matrix = IDENTITY
        for generator in word:
            if generator not in SIMPLE_ROOT_MATRICES:
                raise ValueError(f"Simple reflection index must be 1 or 2, got {generator}")
            root_matrix = _matmul(root_matrix, SIMPLE_ROOT_MATRICES[generator])
            matrix = _matmul(matrix, SIMPLE_COROOT_MATRICES[generator])
        perm = tuple(_root_index(_apply(root_matrix, root)) for root in POSITIVE_ROOTS)
        return cls(tuple(word), root_matrix, matrix, perm)

    @property
    def length(self):
        return len(self.word)

    def apply_root(self, j):
        """Return (index, sign) of w·αⱼ."""
        return self.perm[j - 1]

    def __str__(self):
        return "e" if not self.word else "".join(f"s{generator}" for generator in self.word)


def positive_roots():
    """Return the six ``(Root, Coroot)`` pairs in index order 1..6."""
    return list(zip(POSITIVE_ROOTS, POSITIVE_COROOTS))


def simple_reflection(i):
    """Return the simple reflection σᵢ.

    Raises:
        ValueError: If ``i`` is not 1 or 2.
    """
    if i not in (1, 2):
        raise ValueError(f"Simple reflection index must be 1 or 2, got {i}")
    return WeylElement.from_word((i,))


@cache
def _weyl_group():
    elements = [WeylElement.from_word(())]
    seen = {elements[0].root_matrix}
    frontier = list(elements)
    while frontier:
        following = []
        for element in frontier:
            for generator in (1, 2):
                candidate = WeylElement.from_word(element.word + (generator,))
                if candidate.root_matrix not in seen:
                    seen.add(candidate.root_matrix)
                    following.append(candidate)
        following.sort(key=lambda element: element.word)
        elements.extend(following)
        frontier = following
    return tuple(elements)


def weyl_group():
    """Return the 12 Weyl group elements, ordered by word length then word."""
    return list(_weyl_group())


def compose(w, v):
    """Return w∘v as a canonical element of the group."""
    return _by_root_matrix()[_matmul(w.root_matrix, v.root_matrix)]


def inverse(w):
    """Return w⁻¹ as a canonical element of the group."""
    for v in _weyl_group():
        if _matmul(w.root_matrix, v.root_matrix) == IDENTITY:
            return v
    raise ValueError(f"{w} has no inverse in the group")


def longest_element():
    return _weyl_group()[-1]


@cache
def _by_root_matrix():
    return {element.root_matrix: element for element in _weyl_group()}


def induced_argument_permutation(w, s):
    """Return w⁻¹s, the tuple with entries t_j = s_{perm_w(j)}.

    Signs in the permutation are ignored because s_α = s_{−α}.

    Examples:
        >>> induced_argument_permutation(weyl_group()[0], (1, 2, 3, 4, 5, 6))
        (1, 2, 3, 4, 5, 6)
    """
    s = tuple(s)
    if len(s) != 6:
        raise ValueError(f"Expected 6 arguments, got {len(s)}")
    return tuple(s[index - 1] for index, _ in w.perm)


def delta_w(w):
    """Return {j : w·αⱼ is negative}."""
    return frozenset(j for j, (_, sign) in enumerate(w.perm, start=1) if sign < 0)


def length_classes():
    """Return ``(short, long)`` index sets of the positive roots."""
    return SHORT_ROOTS, LONG_ROOTS


def k_constant():
    """Return K(G₂) = ∏ ⟨αⱼ∨, λ₁ + λ₂⟩ over the positive coroots."""
    return prod(coroot.d1 + coroot.d2 for coroot in POSITIVE_COROOTS)


def weyl_action_on_y(w, y):
    """Apply w to y = y₁α₁∨ + y₂α₂∨ and return the new coordinates."""
    y1, y2 = (Fraction(component) for component in y)
    return tuple(w.matrix[i][0] * y1 + w.matrix[i][1] * y2 for i in range(2))


def admissible_orbit_tuple(k):
    """Return True iff k has the shape (2p, 2q, 2q, 2q, 2p, 2p).

    Such tuples are constant on both root-length classes and have even
    entries, so the Weyl-symmetric sum is 12 times a single zeta value.
    """
    k = tuple(k)
    if len(k) != 6 or any(entry % 2 for entry in k):
        return False
    return len({k[j - 1] for j in SHORT_ROOTS}) == 1 and len({k[j - 1] for j in LONG_ROOTS}) == 1
