"""Conjugacy classifications of a Renner monoid and the associated counts.

Four equivalences are computed: unit conjugacy (orbits of sigma under
sigma -> w sigma w^{-1}), Munn conjugacy (unit conjugacy of invertible
parts), semigroup conjugacy (transitive closure of xy ~ yx), and action
conjugacy (transitive closure of the partial conjugation action).  Unit
conjugacy is computed stratum-by-stratum through coset orbits and also by
brute force; the brute-force partitions validate the structured ones in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .crosslat import CrossIdempotent
from .errors import ConstructionError, SizeCapExceeded
from .monoid import RennerMonoid, element_label, project
from .partialinj import (
    PartialInjection,
    compose,
    inverse,
    invertible_part,
    stable_domain,
)
from .rootsys import WeylElement, group_conjugacy_classes

# Pairwise oracles are O(|R|^2); keep them desk-scale by default.
DEFAULT_PAIRWISE_CAP = 2000


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class OrbitReport:
    """Centralizer orbits on the stabilizer cosets of one idempotent.

    ``orbit_sizes`` is aligned with ``orbit_reps`` and sums to
    ``coset_count`` (the orbits partition the cosets).
    """

    idempotent: CrossIdempotent
    coset_count: int
    orbit_count: int
    orbit_reps: tuple[WeylElement, ...]
    orbit_sizes: tuple[int, ...]


@dataclass(frozen=True)
class ConjClassification:
    """A partition of the monoid with chosen representatives.

    ``strata`` holds the lattice idempotent of each class for the kinds that
    stay inside a stratum (sim) or share a subrank (munn); it is None per
    class for the brute-force semigroup/action kinds.
    """

    kind: str
    classes: tuple[frozenset[PartialInjection], ...]
    representatives: tuple[PartialInjection, ...]
    strata: tuple[Optional[CrossIdempotent], ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def partition(self) -> frozenset[frozenset[PartialInjection]]:
        return frozenset(self.classes)


def _coset_orbits(monoid: RennerMonoid, e: CrossIdempotent) -> OrbitReport:
    """Orbits of the centralizer on the left cosets of the stabilizer,
    acting by conjugation.  The zero stratum is the single class of 0."""
    group = monoid.group
    if e.is_zero:
        return OrbitReport(e, 1, 1, (group.identity,), (1,))
    stab = monoid.lattice.stabilizer(e)
    coset_of: dict[WeylElement, int] = {}
    coset_min: list[WeylElement] = []
    for w in group.elements:  # (length, word) order: first hit is the min rep
        if w in coset_of:
            continue
        cid = len(coset_min)
        coset_min.append(w)
        for h in stab.members:
            coset_of[group.mul(w, h)] = cid
    uf = UnionFind(len(coset_min))
    cent_gens = [group.generators[j] for j in sorted(e.lambda_set)]
    for cid, u in enumerate(coset_min):
        for g in cent_gens:
            uf.union(cid, coset_of[group.conjugate(g, u)])
    orbit_best: dict[int, WeylElement] = {}
    orbit_size: dict[int, int] = {}
    for cid, u in enumerate(coset_min):
        root = uf.find(cid)
        orbit_size[root] = orbit_size.get(root, 0) + 1
        best = orbit_best.get(root)
        if best is None or u.canonical_key() < best.canonical_key():
            orbit_best[root] = u
    ordered = sorted(orbit_best.items(), key=lambda kv: kv[1].canonical_key())
    reps = tuple(u for _, u in ordered)
    sizes = tuple(orbit_size[root] for root, _ in ordered)
    return OrbitReport(e, len(coset_min), len(reps), reps, sizes)


def stratum_orbit_reports(monoid: RennerMonoid) -> tuple[OrbitReport, ...]:
    """One report per lattice idempotent, in lattice order."""
    return tuple(_coset_orbits(monoid, e) for e in monoid.lattice.idempotents)


def count_sim_classes(monoid: RennerMonoid) -> int:
    """Number of unit-conjugacy classes: the orbit counts summed over the
    lattice (the zero stratum contributing one)."""
    return sum(r.orbit_count for r in stratum_orbit_reports(monoid))


def _unit_conjugation_pairs(monoid: RennerMonoid, gens_only: bool = False):
    group = monoid.group
    source = group.generators if gens_only else group.elements
    return [
        (monoid.unit_for(w), monoid.unit_for(group.inv(w))) for w in source
    ]


def sim_conjugacy_classes(monoid: RennerMonoid) -> ConjClassification:
    """Unit-conjugacy classes, one per centralizer orbit on stabilizer
    cosets, with representatives u*e for the minimal coset representatives."""
    classes = [frozenset({monoid.zero})]
    reps = [monoid.zero]
    strata: list[Optional[CrossIdempotent]] = [monoid.lattice.zero]
    conj_pairs = _unit_conjugation_pairs(monoid)
    for e in monoid.lattice.nonzero:
        report = _coset_orbits(monoid, e)
        e_map = monoid.idempotent_map(e)
        for u in report.orbit_reps:
            rep = compose(monoid.unit_for(u), e_map)
            cls = frozenset(
                compose(wp, compose(rep, wq)) for wp, wq in conj_pairs
            )
            classes.append(cls)
            reps.append(rep)
            strata.append(e)
    return ConjClassification("sim", tuple(classes), tuple(reps), tuple(strata))


def _classes_from_unionfind(
    monoid: RennerMonoid, uf: UnionFind, kind: str, with_strata: bool
) -> ConjClassification:
    groups: dict[int, list[int]] = {}
    for idx in range(len(monoid.elements)):
        groups.setdefault(uf.find(idx), []).append(idx)
    ordered = sorted(groups.values(), key=min)
    classes = tuple(frozenset(monoid.elements[i] for i in idxs) for idxs in ordered)
    reps = tuple(monoid.elements[min(idxs)] for idxs in ordered)
    if with_strata:
        strata = tuple(monoid.stratum_of(rep) for rep in reps)
    else:
        strata = (None,) * len(classes)
    return ConjClassification(kind, classes, reps, strata)


def sim_classes_bruteforce(monoid: RennerMonoid) -> ConjClassification:
    """Oracle: direct orbits of sigma -> w sigma w^{-1} over the unit group
    (conjugating by the generators suffices to close the orbits)."""
    uf = UnionFind(len(monoid.elements))
    gen_pairs = _unit_conjugation_pairs(monoid, gens_only=True)
    for idx, p in enumerate(monoid.elements):
        for gp, gq in gen_pairs:
            uf.union(idx, monoid.index_of(compose(gp, compose(p, gq))))
    return _classes_from_unionfind(monoid, uf, "sim", with_strata=True)


def munn_classes(monoid: RennerMonoid) -> ConjClassification:
    """Partition by subrank and the conjugacy class of the projected
    invertible part inside the realized lambda_star subgroup."""
    star_tables: dict[int, dict[PartialInjection, int]] = {}
    star_reps: dict[tuple[int, int], PartialInjection] = {}
    for e in monoid.lattice.nonzero:
        star = monoid.lattice.star_group(e)
        e_map = monoid.idempotent_map(e)
        realized = [(u, compose(monoid.unit_for(u), e_map)) for u in star.members]
        members = [p for _, p in realized]
        if len(set(members)) != len(members):
            raise ConstructionError("lambda_star subgroup does not embed on its face")
        inverses = [inverse(p) for p in members]
        table: dict[PartialInjection, int] = {}
        count = 0
        for _, p in realized:  # (length, word) order of the underlying units
            if p in table:
                continue
            cid = count
            count += 1
            for q in {compose(g, compose(p, gi)) for g, gi in zip(members, inverses)}:
                table[q] = cid
            star_reps[(e.index, cid)] = p
        star_tables[e.index] = table

    buckets: dict[tuple[int, int], list[PartialInjection]] = {}
    for sigma in monoid.elements:
        part = invertible_part(sigma)
        if part == monoid.zero:
            key = (monoid.lattice.zero.index, 0)
        else:
            e = monoid.stratum_of(part)
            key = (e.index, star_tables[e.index][project(monoid, part)])
        buckets.setdefault(key, []).append(sigma)

    classes = []
    reps = []
    strata = []
    for key in sorted(buckets):
        e = monoid.lattice.idempotents[key[0]]
        classes.append(frozenset(buckets[key]))
        reps.append(monoid.zero if e.is_zero else star_reps[key])
        strata.append(e)
    return ConjClassification("munn", tuple(classes), tuple(reps), tuple(strata))


def semigroup_conjugacy_classes(
    monoid: RennerMonoid, max_size: int = DEFAULT_PAIRWISE_CAP
) -> ConjClassification:
    """Transitive closure of the primary relation pairing xy with yx, by
    union-find over all ordered pairs."""
    n = len(monoid.elements)
    if n > max_size:
        raise SizeCapExceeded(f"pairwise closure over {n} elements exceeds cap {max_size}")
    uf = UnionFind(n)
    index = monoid.index_of
    elements = monoid.elements
    for x in elements:
        for y in elements:
            uf.union(index(compose(x, y)), index(compose(y, x)))
    return _classes_from_unionfind(monoid, uf, "semigroup", with_strata=False)


def action_conjugacy_classes(
    monoid: RennerMonoid, max_size: int = DEFAULT_PAIRWISE_CAP
) -> ConjClassification:
    """Transitive closure of the partial conjugation action: sigma moves x
    to sigma x sigma^{-1} whenever the stable domain of x sits inside the
    domain of sigma."""
    n = len(monoid.elements)
    if n > max_size:
        raise SizeCapExceeded(f"pairwise closure over {n} elements exceeds cap {max_size}")
    uf = UnionFind(n)
    index = monoid.index_of
    elements = monoid.elements
    inverses = [inverse(s) for s in elements]
    stable = [stable_domain(x) for x in elements]
    for xi, x in enumerate(elements):
        needed = stable[xi]
        for si, s in enumerate(elements):
            if needed <= s.domain:
                uf.union(xi, index(compose(s, compose(x, inverses[si]))))
    return _classes_from_unionfind(monoid, uf, "action", with_strata=False)


def irreducible_rep_count(monoid: RennerMonoid) -> int:
    """Number of inequivalent irreducible representations over a field of
    characteristic zero: conjugacy classes of the lambda_star parabolic
    summed over the lattice, the zero stratum contributing one.

    Computed from the lattice alone (abstract parabolic subgroups), which
    makes it an independent route against the element-level Munn count.
    """
    total = 1
    for e in monoid.lattice.nonzero:
        total += len(group_conjugacy_classes(monoid.lattice.star_group(e)))
    return total


def munn_count_rook(points: int) -> int:
    """Munn class count of the rook monoid on the given number of points:
    the integer partitions of every r up to that number, summed.

    >>> [munn_count_rook(m) for m in range(5)]
    [1, 2, 4, 7, 12]
    """
    if points < 0:
        raise ValueError("the number of points must be nonnegative")
    parts = [1] + [0] * points
    for k in range(1, points + 1):
        for n in range(k, points + 1):
            parts[n] += parts[n - k]
    return sum(parts)


def classification_to_json(
    monoid: RennerMonoid, classification: ConjClassification
) -> dict:
    """Export: kind, class count, and per class its stratum label, size, and
    representative (as sorted source/target pairs plus a readable label)."""
    classes = []
    for e, cls, rep in zip(
        classification.strata, classification.classes, classification.representatives
    ):
        classes.append(
            {
                "stratum": e.label if e is not None else None,
                "size": len(cls),
                "representative": rep.to_pairs(),
                "label": element_label(monoid, rep),
            }
        )
    return {
        "kind": classification.kind,
        "class_count": classification.class_count,
        "classes": classes,
    }


def orbit_report_rows(monoid: RennerMonoid) -> list[list]:
    """Rows (e, |W(e)|, |W_*(e)|, coset_count, n_e), one per idempotent."""
    rows = []
    lattice = monoid.lattice
    for report in stratum_orbit_reports(monoid):
        e = report.idempotent
        rows.append(
            [
                e.label,
                lattice.centralizer(e).order,
                lattice.stabilizer(e).order,
                report.coset_count,
                report.orbit_count,
            ]
        )
    return rows
