"""Cartan data and Weyl groups acting on a weight orbit.

Weights are plain integer tuples in fundamental-weight coordinates.  A Weyl
group is realized concretely: the orbit of a seed weight under the simple
reflections becomes the vertex set, and every group element is stored as a
permutation of that orbit together with its Coxeter length and its lex-least
reduced word over the simple generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidType, SizeCapExceeded

# Large enough for F4, the biggest Weyl group supported at desk scale.
DEFAULT_MAX_GROUP_ORDER = 1152

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANK = {"F": 4, "G": 2}


def _validate_type(letter: str, rank: int) -> None:
    if letter in _MIN_RANK:
        if rank < _MIN_RANK[letter]:
            raise InvalidType(
                f"type {letter} requires rank >= {_MIN_RANK[letter]}, got {rank}"
            )
    elif letter in _FIXED_RANK:
        if rank != _FIXED_RANK[letter]:
            raise InvalidType(f"type {letter} requires rank {_FIXED_RANK[letter]}, got {rank}")
    else:
        raise InvalidType(f"unknown type letter {letter!r} (expected one of A, B, C, D, F, G)")


def standard_weyl_order(letter: str, rank: int) -> int:
    """Order of the Weyl group of the given type, from the classical tables."""
    _validate_type(letter, rank)
    if letter == "A":
        return math.factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    if letter == "F":
        return 1152
    return 12  # G2


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix.

    Row i is the simple root alpha_i written in fundamental-weight
    coordinates, so reflections act by row subtraction (see ``reflect``).
    """

    letter: str
    rank: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def adjacent(self, i: int, j: int) -> bool:
        """Dynkin-diagram adjacency of the simple roots i and j."""
        return i != j and self.rows[i][j] != 0


def cartan_matrix(letter: str, rank: int) -> CartanMatrix:
    """Cartan matrix of a finite type.

    >>> cartan_matrix("A", 2).rows
    ((2, -1), (-1, 2))
    >>> cartan_matrix("B", 2).rows
    ((2, -1), (-2, 2))
    >>> cartan_matrix("G", 2).rows
    ((2, -1), (-3, 2))
    """
    _validate_type(letter, rank)
    m = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 2
    if letter == "D":
        # Chain on the first rank-1 nodes; the last node hangs off node rank-3.
        for i in range(rank - 2):
            m[i][i + 1] = m[i + 1][i] = -1
        m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1
    else:
        for i in range(rank - 1):
            m[i][i + 1] = m[i + 1][i] = -1
        if letter == "B":
            m[rank - 1][rank - 2] = -2
        elif letter == "C":
            m[rank - 2][rank - 1] = -2
        elif letter == "F":
            m[2][1] = -2
        elif letter == "G":
            m[1][0] = -3
    return CartanMatrix(letter, rank, tuple(tuple(row) for row in m))


def reflect(cartan: CartanMatrix, i: int, v: Sequence[int]) -> Weight:
    """Apply the simple reflection s_i to v in fundamental-weight coordinates.

    s_i(v) = v - v[i] * alpha_i, and row i of the Cartan matrix is alpha_i in
    these coordinates.  Vectors with v[i] == 0 are fixed.

    >>> reflect(cartan_matrix("A", 2), 0, (1, 0))
    (-1, 1)
    >>> reflect(cartan_matrix("G", 2), 1, (0, 1))
    (3, -1)
    """
    c = v[i]
    row = cartan.rows[i]
    return tuple(x - c * a for x, a in zip(v, row))


def weight_orbit(
    cartan: CartanMatrix, seed: Sequence[int], max_size: int = DEFAULT_MAX_GROUP_ORDER
) -> tuple[Weight, ...]:
    """Orbit of ``seed`` under the Weyl group, in BFS order (seed first)."""
    start = tuple(seed)
    if len(start) != cartan.rank:
        raise ValueError(f"seed has length {len(start)}, expected rank {cartan.rank}")
    seen = {start}
    orbit = [start]
    for v in orbit:  # grows while we iterate
        for i in range(cartan.rank):
            u = reflect(cartan, i, v)
            if u not in seen:
                if len(seen) >= max_size:
                    raise SizeCapExceeded(f"weight orbit exceeds the cap {max_size}")
                seen.add(u)
                orbit.append(u)
    return tuple(orbit)


@dataclass(frozen=True)
class WeylElement:
    """A group element: permutation of the vertex orbit, Coxeter length, and
    the lex-least reduced word (0-based generator indices)."""

    perm: tuple[int, ...]
    length: int
    word: tuple[int, ...]

    def canonical_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length, self.word)


class WeylGroup:
    """A Weyl group realized as permutations of a weight orbit.

    ``elements`` is in BFS order from the identity, which coincides with
    sorting by (length, lex-least reduced word).  Products of elements are
    resolved through a permutation table, so every product is one of the
    stored canonical elements.
    """

    def __init__(
        self,
        cartan: CartanMatrix,
        vertex_orbit: tuple[Weight, ...],
        elements: tuple[WeylElement, ...],
        generators: tuple[WeylElement, ...],
    ):
        self.cartan = cartan
        self.vertex_orbit = vertex_orbit
        self.elements = elements
        self.generators = generators
        self.identity = elements[0]
        self._by_perm = {w.perm: w for w in elements}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return len(self.vertex_orbit)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return self._by_perm.get(w.perm) == w

    def element_with_perm(self, perm: tuple[int, ...]) -> WeylElement:
        return self._by_perm[perm]

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """Product a*b, acting as b first (function composition)."""
        return self._by_perm[tuple(a.perm[x] for x in b.perm)]

    def inv(self, a: WeylElement) -> WeylElement:
        p = [0] * len(a.perm)
        for i, ai in enumerate(a.perm):
            p[ai] = i
        return self._by_perm[tuple(p)]

    def conjugate(self, w: WeylElement, x: WeylElement) -> WeylElement:
        """w x w^{-1}."""
        return self.mul(self.mul(w, x), self.inv(w))

    def from_word(self, word: Iterable[int]) -> WeylElement:
        el = self.identity
        for i in word:
            el = self.mul(el, self.generators[i])
        return el

    def apply_to_face(self, w: WeylElement, face: Iterable[int]) -> frozenset[int]:
        return frozenset(w.perm[i] for i in face)


def generate_weyl(
    cartan: CartanMatrix, seed: Sequence[int], max_order: int = DEFAULT_MAX_GROUP_ORDER
) -> WeylGroup:
    """Generate the Weyl group as permutations of the orbit of ``seed``.

    BFS from the identity assigns each element its Coxeter length and the
    lex-least reduced word: layers are expanded in discovery order with
    generators tried in increasing index, so within a layer candidates appear
    in lex order and the first word reaching an element is its minimum.

    If the seed orbit is not regular the result is the image of the Weyl
    group in the symmetric group of the orbit, which may be a proper
    quotient; callers that need faithfulness must check the order.
    """
    orbit = weight_orbit(cartan, seed, max_size=max_order)
    index = {v: k for k, v in enumerate(orbit)}
    n = len(orbit)
    gen_perms = [
        tuple(index[reflect(cartan, i, v)] for v in orbit) for i in range(cartan.rank)
    ]
    identity = WeylElement(tuple(range(n)), 0, ())
    by_perm: dict[tuple[int, ...], WeylElement] = {identity.perm: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for i, g in enumerate(gen_perms):
                p = tuple(w.perm[x] for x in g)
                if p in by_perm:
                    continue
                if len(by_perm) >= max_order:
                    raise SizeCapExceeded(f"Weyl group exceeds the cap {max_order}")
                el = WeylElement(p, w.length + 1, w.word + (i,))
                by_perm[p] = el
                nxt.append(el)
        frontier = nxt
    elements = tuple(by_perm.values())
    generators = tuple(by_perm[g] for g in gen_perms)
    return WeylGroup(cartan, orbit, elements, generators)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a Weyl group generated by a subset of the simple
    reflections, with members sorted by (length, word)."""

    parent: WeylGroup
    generator_indices: frozenset[int]
    members: tuple[WeylElement, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[WeylElement]:
        return frozenset(self.members)

    def __contains__(self, w: WeylElement) -> bool:
        return w in self.member_set


def parabolic(group: WeylGroup, indices: Iterable[int]) -> Subgroup:
    """Standard parabolic subgroup generated by the given simple reflections."""
    J = frozenset(indices)
    gens = [group.generators[j] for j in sorted(J)]
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = group.mul(w, g)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    members = tuple(sorted(seen, key=WeylElement.canonical_key))
    return Subgroup(group, J, members)


def min_coset_reps(group: WeylGroup, indices: Iterable[int]) -> tuple[WeylElement, ...]:
    """One element per left coset w*W_J: its unique minimal-length member.

    Listed in (length, word) order.  For J empty this is the whole group;
    for J the full index set it is just the identity.
    """
    sub = parabolic(group, indices)
    covered: set[WeylElement] = set()
    reps = []
    for w in group.elements:  # already sorted by (length, word)
        if w in covered:
            continue
        reps.append(w)
        for h in sub.members:
            covered.add(group.mul(w, h))
    return tuple(reps)


def group_conjugacy_classes(sub: Subgroup) -> tuple[tuple[WeylElement, ...], ...]:
    """Conjugation orbits of the subgroup acting on itself.

    Each class is sorted by (length, word) and classes are ordered by their
    least member, so ``cls[0]`` is the canonical representative.
    """
    group = sub.parent
    seen: set[WeylElement] = set()
    classes = []
    for x in sub.members:
        if x in seen:
            continue
        orbit = {group.conjugate(g, x) for g in sub.members}
        seen |= orbit
        classes.append(tuple(sorted(orbit, key=WeylElement.canonical_key)))
    return tuple(classes)
