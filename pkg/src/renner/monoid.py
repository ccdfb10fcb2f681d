"""Renner monoids of J-irreducible type, built inside the rook monoid on a
weight orbit.

The monoid is the multiplicative closure of the Weyl permutations and the
partial identities on the lattice faces.  Every nonzero element factors as
(partial identity on its range) * unit * (partial identity on its domain);
picking the shortest, lex-least unit makes that normal form canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .crosslat import (
    CrossIdempotent,
    CrossSectionLattice,
    DominantWeightSpec,
    cross_section_lattice,
)
from .errors import (
    ConstructionError,
    FaithfulnessError,
    NotInOrbit,
    SizeCapExceeded,
    ZeroElement,
)
from .partialinj import PartialInjection, compose, inverse, restrict, stable_domain
from .rootsys import (
    DEFAULT_MAX_GROUP_ORDER,
    CartanMatrix,
    WeylElement,
    WeylGroup,
    generate_weyl,
    standard_weyl_order,
)

DEFAULT_MAX_MONOID_ORDER = 250_000


@dataclass(frozen=True)
class NormalForm:
    """sigma = e_range * unit * e_domain with the canonical unit (the
    shortest, lex-least one agreeing with sigma on its domain)."""

    range_face: frozenset[int]
    unit: WeylElement
    domain_face: frozenset[int]


@dataclass(frozen=True)
class FaceTransporter:
    """Shortest-unit partial map carrying a lattice face onto a face of its
    orbit; ``map`` is the unit restricted to the base face."""

    target_face: frozenset[int]
    base_face: frozenset[int]
    unit: WeylElement
    map: PartialInjection


class RennerMonoid:
    """A Renner monoid as a concrete set of partial injections.

    ``elements`` is in closure-discovery order (deterministic); the partial
    order of strata, faces, and all derived maps are precomputed.  Instances
    are immutable after construction and safe to share.
    """

    def __init__(
        self,
        group: WeylGroup,
        lattice: CrossSectionLattice,
        elements: tuple[PartialInjection, ...],
        generators: tuple[PartialInjection, ...],
        face_to_idem: dict[frozenset[int], CrossIdempotent],
        face_orbits: dict[int, tuple[frozenset[int], ...]],
        strata: dict[int, tuple[int, ...]],
    ):
        self.group = group
        self.lattice = lattice
        self.elements = elements
        self.generators = generators
        self.face_to_idem = face_to_idem
        self.face_orbits = face_orbits
        self.strata = strata
        self._index = {p: i for i, p in enumerate(elements)}
        degree = group.degree
        self.zero = PartialInjection.zero(degree)
        self.one = PartialInjection.identity(degree)
        self._unit_by_perm = {w.perm: PartialInjection(w.perm) for w in group.elements}
        self._weyl_by_unit = {
            self._unit_by_perm[w.perm]: w for w in group.elements
        }
        self._idem_maps = {
            e.index: PartialInjection.partial_identity(degree, e.face_vertices)
            for e in lattice.idempotents
        }
        self._transporters: dict[tuple[frozenset[int], frozenset[int]], FaceTransporter] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.group.degree

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma: PartialInjection) -> bool:
        return sigma in self._index

    def index_of(self, sigma: PartialInjection) -> int:
        return self._index[sigma]

    @property
    def units(self) -> tuple[PartialInjection, ...]:
        """Unit elements aligned with ``group.elements``."""
        return tuple(self._unit_by_perm[w.perm] for w in self.group.elements)

    def unit_for(self, w: WeylElement) -> PartialInjection:
        return self._unit_by_perm[w.perm]

    def weyl_for(self, unit: PartialInjection) -> WeylElement:
        return self._weyl_by_unit[unit]

    def is_unit(self, sigma: PartialInjection) -> bool:
        return sigma in self._weyl_by_unit

    def idempotent_map(self, e: CrossIdempotent) -> PartialInjection:
        """The partial identity on the face of e (zero map for e = 0)."""
        return self._idem_maps[e.index]

    def stratum_of(self, sigma: PartialInjection) -> CrossIdempotent:
        """The lattice idempotent whose double coset contains sigma."""
        return self.face_to_idem[sigma.domain]

    def stratum_elements(self, e: CrossIdempotent) -> tuple[PartialInjection, ...]:
        return tuple(self.elements[i] for i in self.strata[e.index])

    def conjugate_by_unit(
        self, w: WeylElement, sigma: PartialInjection
    ) -> PartialInjection:
        """w sigma w^{-1} inside the monoid."""
        u = self._unit_by_perm[w.perm]
        return compose(u, compose(sigma, self._unit_by_perm[self.group.inv(w).perm]))


def _face_orbit(group: WeylGroup, face: frozenset[int]) -> tuple[frozenset[int], ...]:
    seen = {face}
    orbit = [face]
    for f in orbit:
        for g in group.generators:
            h = group.apply_to_face(g, f)
            if h not in seen:
                seen.add(h)
                orbit.append(h)
    return tuple(orbit)


def build_renner(
    cartan: CartanMatrix,
    mu: Sequence[int],
    *,
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER,
    max_monoid_order: int = DEFAULT_MAX_MONOID_ORDER,
) -> RennerMonoid:
    """Build the Renner monoid of the J-irreducible monoid with highest
    weight ``mu`` over the given Cartan type.

    The element set is the multiplicative closure of the Weyl permutations of
    the weight orbit together with the partial identities on the lattice
    faces (the empty face contributing the zero map).
    """
    spec = DominantWeightSpec(tuple(mu))
    if len(spec.mu) != cartan.rank:
        raise ValueError(f"weight has length {len(spec.mu)}, expected rank {cartan.rank}")
    group = generate_weyl(cartan, spec.mu, max_order=max_group_order)
    expected = standard_weyl_order(cartan.letter, cartan.rank)
    if group.order != expected:
        raise FaithfulnessError(
            f"Weyl group acts unfaithfully on the orbit of {spec.mu}: "
            f"closure has order {group.order}, expected {expected}"
        )
    lattice = cross_section_lattice(group, spec)
    degree = group.degree

    gen_list: list[PartialInjection] = []
    seen_gens: set[PartialInjection] = set()
    for g in group.generators:
        p = PartialInjection(g.perm)
        if p not in seen_gens:
            seen_gens.add(p)
            gen_list.append(p)
    for e in lattice.idempotents:
        p = PartialInjection.partial_identity(degree, e.face_vertices)
        if p not in seen_gens:
            seen_gens.add(p)
            gen_list.append(p)
    generators = tuple(gen_list)

    elems: dict[PartialInjection, int] = {}

    def add(p: PartialInjection) -> bool:
        if p in elems:
            return False
        if len(elems) >= max_monoid_order:
            raise SizeCapExceeded(f"Renner monoid exceeds the cap {max_monoid_order}")
        elems[p] = len(elems)
        return True

    add(PartialInjection.identity(degree))
    for g in generators:
        add(g)
    frontier = list(elems)
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                p = compose(a, g)
                if add(p):
                    nxt.append(p)
        frontier = nxt
    elements = tuple(elems)

    face_to_idem: dict[frozenset[int], CrossIdempotent] = {}
    face_orbits: dict[int, tuple[frozenset[int], ...]] = {}
    for e in lattice.idempotents:
        orbit = _face_orbit(group, e.face_vertices)
        for f in orbit:
            if f in face_to_idem:
                raise ConstructionError("face orbits of distinct idempotents overlap")
            face_to_idem[f] = e
        face_orbits[e.index] = orbit

    strata_lists: dict[int, list[int]] = {e.index: [] for e in lattice.idempotents}
    for p, idx in elems.items():
        e_dom = face_to_idem.get(p.domain)
        e_img = face_to_idem.get(p.image)
        if e_dom is None or e_img is None or e_dom is not e_img:
            raise ConstructionError("element escapes the stratum decomposition")
        strata_lists[e_dom.index].append(idx)
    strata = {k: tuple(v) for k, v in strata_lists.items()}

    monoid = RennerMonoid(
        group, lattice, elements, generators, face_to_idem, face_orbits, strata
    )
    unit_count = sum(1 for p in elements if len(p.domain) == degree)
    if unit_count != group.order:
        raise ConstructionError("unit group of the closure differs from the Weyl group")
    return monoid


def normal_form(monoid: RennerMonoid, sigma: PartialInjection) -> NormalForm:
    """Factor a nonzero element through its domain and range faces.

    The unit is the (length, word)-least one agreeing with sigma on its
    domain, so the form is deterministic; the zero element is rejected.
    """
    if sigma == monoid.zero:
        raise ZeroElement("the zero element has no normal form")
    if sigma not in monoid:
        raise ValueError("element does not belong to the monoid")
    dom = sigma.domain
    targets = sigma.targets
    for w in monoid.group.elements:  # (length, word) order
        perm = w.perm
        if all(perm[i] == targets[i] for i in dom):
            return NormalForm(sigma.image, w, dom)
    raise ConstructionError("no unit extends the element")


def reconstruct(monoid: RennerMonoid, form: NormalForm) -> PartialInjection:
    """Multiply a normal form back into the element it came from."""
    degree = monoid.degree
    e_rng = PartialInjection.partial_identity(degree, form.range_face)
    e_dom = PartialInjection.partial_identity(degree, form.domain_face)
    return compose(e_rng, compose(monoid.unit_for(form.unit), e_dom))


def subrank(monoid: RennerMonoid, sigma: PartialInjection) -> CrossIdempotent:
    """The lattice idempotent whose stratum holds the invertible part of
    sigma; the zero idempotent when the stable domain is empty."""
    face = stable_domain(sigma)
    e = monoid.face_to_idem.get(face)
    if e is None:
        raise ConstructionError("stable domain is not a lattice face")
    return e


def face_transporter(
    monoid: RennerMonoid, base: Iterable[int], target: Iterable[int]
) -> FaceTransporter:
    """The shortest unit carrying the lattice face ``base`` onto ``target``.

    The base must be the face of a lattice idempotent; the target must lie in
    its orbit, else ``NotInOrbit``.  The minimal-length mover is unique, and
    scanning units in (length, word) order finds it.
    """
    base = frozenset(base)
    target = frozenset(target)
    cached = monoid._transporters.get((base, target))
    if cached is not None:
        return cached
    owner = monoid.face_to_idem.get(base)
    if owner is None or owner.face_vertices != base:
        raise ValueError("base must be the face of a lattice idempotent")
    if target not in monoid.face_orbits[owner.index]:
        raise NotInOrbit(f"face {sorted(target)} is not in the orbit of {sorted(base)}")
    group = monoid.group
    for w in group.elements:
        if group.apply_to_face(w, base) == target:
            transporter = FaceTransporter(
                target, base, w, restrict(monoid.unit_for(w), base)
            )
            monoid._transporters[(base, target)] = transporter
            return transporter
    raise ConstructionError("orbit member has no mover")


def project(monoid: RennerMonoid, sigma: PartialInjection) -> PartialInjection:
    """Transport a nonzero element back to a bijection of its stratum's
    lattice face (an element of the realized lambda_star subgroup).

    Units project to themselves; conjugating by the transporters preserves
    products of composable pairs within a stratum.
    """
    if sigma == monoid.zero:
        raise ZeroElement("the zero element has no projection")
    e = monoid.stratum_of(sigma)
    base = e.face_vertices
    to_dom = face_transporter(monoid, base, sigma.domain)
    to_rng = face_transporter(monoid, base, sigma.image)
    return compose(inverse(to_rng.map), compose(sigma, to_dom.map))


def element_label(monoid: RennerMonoid, sigma: PartialInjection) -> str:
    """Readable name: unit word times the domain-face name, e.g. "s1s2*e_0"."""
    if sigma == monoid.zero:
        return "0"
    form = normal_form(monoid, sigma)
    word = "".join(f"s{i + 1}" for i in form.unit.word) or "1"
    if len(sigma.domain) == monoid.degree:
        return word
    idem = monoid.face_to_idem[sigma.domain]
    if sigma.domain == idem.face_vertices:
        face = idem.label
    else:
        face = "e[" + ",".join(str(i) for i in sorted(sigma.domain)) + "]"
    return face if word == "1" else f"{word}*{face}"


def monoid_to_json(monoid: RennerMonoid) -> dict:
    """Export: vertices, generators, elements (pair lists), and strata."""
    return {
        "vertices": [list(v) for v in monoid.group.vertex_orbit],
        "generators": [g.to_pairs() for g in monoid.generators],
        "elements": [p.to_pairs() for p in monoid.elements],
        "strata": {
            e.label: list(monoid.strata[e.index]) for e in monoid.lattice.idempotents
        },
    }
