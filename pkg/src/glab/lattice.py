"""Subgroup enumeration up to conjugacy, and Sylow subgroups.

The enumeration uses cyclic extension: starting from the trivial group and
the prime-order cyclic subgroups, every solvable subgroup arises by
repeatedly extending a known subgroup H by a prime-order cyclic subgroup of
N_G(H)/H.  Cyclic extension alone misses perfect subgroups, so those are
seeded separately by a two-generator search (every perfect subgroup in
range of this library's intended scale is generated by two elements).

Sylow subgroups are grown without the lattice: starting from any
p-element, a p-subgroup P < G that is Sylow in N_G(P) is Sylow in G, so it
suffices to climb through normalizers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import CapExceeded, ContainmentError, effective_lattice_cap
from .perm import PermGroup, centralizer, generated, normalizer
from .structure import derived_subgroup, is_solvable, quotient


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            if not out or out[-1] != d:
                out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _prime_power_dividing(p, n):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return p ** e


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups.

    ``representative`` is the class member whose element-set key is
    smallest; ``conjugates`` maps each member's key to a conjugating
    element carrying the representative onto it.
    """

    representative: PermGroup
    conjugates: dict = field(repr=False)

    @property
    def order(self):
        return self.representative.order()

    @property
    def size(self):
        return len(self.conjugates)

    def members(self):
        """All subgroups in the class, as (subgroup, conjugator) pairs."""
        rep = self.representative
        return [
            (rep.conjugated_by(x), x) for x in self.conjugates.values()
        ]

    def __repr__(self):
        return f"SubgroupClass(order={self.order}, size={self.size})"


class SubgroupLattice:
    """All subgroups of a group, organised into conjugacy classes."""

    def __init__(self, group, classes):
        self.group = group
        self.classes = tuple(
            sorted(classes, key=lambda c: (c.order, tuple(sorted(c.representative.key()))))
        )
        self._by_key = {}
        for cls in self.classes:
            for key in cls.conjugates:
                self._by_key[key] = cls

    def __len__(self):
        return len(self.classes)

    def subgroup_count(self):
        return sum(cls.size for cls in self.classes)

    def classes_of_order(self, order):
        return tuple(cls for cls in self.classes if cls.order == order)

    def class_of(self, subgroup, scan_cap=None):
        """The class containing the given subgroup of the ambient group."""
        key = subgroup.key(scan_cap)
        if key not in self._by_key:
            raise ContainmentError("subgroup not found in the lattice")
        return self._by_key[key]

    def conjugator_onto(self, subgroup, scan_cap=None):
        """An ambient element carrying the class representative onto the subgroup."""
        cls = self.class_of(subgroup, scan_cap)
        return cls.conjugates[subgroup.key(scan_cap)]


def _class_closure(group, subgroup, scan_cap):
    """All conjugates of a subgroup: key -> conjugating element from the rep.

    Keys are element-set frozensets; the representative is the member with
    the smallest sorted key, and returned conjugators are rebased onto it.
    """
    seed_key = subgroup.key(scan_cap)
    ident = group.identity()
    found = {seed_key: ident}
    frontier = [(subgroup, ident)]
    while frontier:
        current, via = frontier.pop()
        for g in group.generators:
            img = current.conjugated_by(g)
            key = img.key(scan_cap)
            if key not in found:
                step = via * g
                found[key] = step
                frontier.append((img, step))
    rep_key = min(found, key=lambda k: tuple(sorted(k)))
    to_rep = found[rep_key]
    rebased = {key: to_rep.inverse() * x for key, x in found.items()}
    rep = subgroup.conjugated_by(to_rep)
    return rep, rep_key, rebased


def _prime_order_subgroups_of(group, scan_cap):
    """Distinct prime-order cyclic subgroups, one per element set."""
    seen = set()
    out = []
    for x in group.elements(scan_cap):
        if x.is_identity():
            continue
        o = x.order()
        for p in _prime_factors(o):
            y = x ** (o // p)
            sub = PermGroup(group.degree, (y,))
            key = sub.key(scan_cap)
            if key not in seen:
                seen.add(key)
                out.append(sub)
    return out


def _perfect_seed_subgroups(group, scan_cap):
    """Two-generator perfect subgroups, used to seed cyclic extension.

    Candidate pairs are pruned hard: the first generator runs over
    conjugacy class representatives, the second over orbit representatives
    of the centralizer of the first acting by conjugation on the group's
    elements.  A perfect group has even order >= 60, and a subgroup
    equal to its own derived subgroup is perfect.
    """
    from .structure import conjugacy_class_reps

    if group.order() < 60 or is_solvable(group):
        return []
    elems = group.elements(scan_cap)
    seen = set()
    out = []
    for a in conjugacy_class_reps(group, scan_cap):
        if a.is_identity():
            continue
        cent = centralizer(group, a, scan_cap)
        cent_elems = cent.elements(scan_cap)
        orbit_reps = []
        covered = set()
        for b in elems:
            if b.images in covered:
                continue
            orbit_reps.append(b)
            for c in cent_elems:
                covered.add(b.conjugated_by(c).images)
        for b in orbit_reps:
            if b.is_identity():
                continue
            sub = generated(group.degree, (a, b))
            n = sub.order()
            if n < 60 or n % 2 or n > group.order():
                continue
            key = sub.key(scan_cap)
            if key in seen:
                continue
            seen.add(key)
            if derived_subgroup(sub).order() == n:
                out.append(sub)
    return out


def enumerate_subgroups(group, lattice_cap=None, scan_cap=None):
    """All subgroups up to conjugacy, by cyclic extension with perfect seeds.

    Raises CapExceeded when the group's order exceeds the lattice cap; the
    cap guards against the exponential cost of full enumeration.
    """
    cap = effective_lattice_cap(lattice_cap)
    if group.order() > cap:
        raise CapExceeded("subgroup enumeration", group.order(), cap)
    degree = group.degree

    classes = {}  # rep_key -> (rep, conjugates dict)
    pending = []

    def register(sub):
        key = sub.key(scan_cap)
        for rep_key, (_, conj) in classes.items():
            if key in conj:
                return False
        rep, rep_key, conj = _class_closure(group, sub, scan_cap)
        classes[rep_key] = (rep, conj)
        pending.append(rep)
        return True

    register(PermGroup.trivial(degree))
    for sub in _prime_order_subgroups_of(group, scan_cap):
        register(sub)
    for sub in _perfect_seed_subgroups(group, scan_cap):
        register(sub)
    register(group)

    while pending:
        h = pending.pop()
        if h.order() == group.order():
            continue
        n = normalizer(group, h, scan_cap)
        if n.order() == h.order():
            continue
        q = quotient(n, h, scan_cap)
        for cyc in _prime_order_subgroups_of(q.image_group, scan_cap):
            ext = q.preimage_subgroup(cyc)
            register(ext)

    return SubgroupLattice(
        group,
        [SubgroupClass(rep, conj) for rep, conj in classes.values()],
    )


def contained_up_to_conjugacy(lattice, subgroup, scan_cap=None):
    """True when some conjugate of the subgroup appears in the lattice."""
    key = subgroup.key(scan_cap)
    return key in lattice._by_key


def sylow_subgroup(group, p, scan_cap=None):
    """A Sylow p-subgroup, grown through normalizers.

    Start from any p-element; while the current p-subgroup P is not yet of
    full p-power order, N_G(P)/P has order divisible by p, so a p-element
    of the quotient pulls back to a strictly larger p-subgroup.  This
    stays polynomial in practice and never builds the subgroup lattice.
    """
    if p < 2 or _prime_factors(p) != [p]:
        raise ValueError(f"{p} is not prime")
    target = _prime_power_dividing(p, group.order())
    current = PermGroup.trivial(group.degree)
    if target == 1:
        return current
    # find an element of order p by powering any element of order divisible by p
    seed = None
    for x in group.chain.iter_elements():
        o = x.order()
        if o % p == 0:
            seed = x ** (o // p)
            break
    current = PermGroup(group.degree, (seed,))
    while current.order() < target:
        n = normalizer(group, current, scan_cap)
        q = quotient(n, current, scan_cap)
        lift = None
        for y in q.image_group.chain.iter_elements():
            o = y.order()
            if o % p == 0:
                lift = q.preimage_of(y ** (o // p))
                break
        if lift is None:
            raise AssertionError("normalizer growth stalled below full p-power order")
        current = PermGroup(
            group.degree, tuple(current.generators) + (lift,)
        )
    return current


def all_sylow_subgroups(group, p, scan_cap=None):
    """Every Sylow p-subgroup (they form a single conjugacy class)."""
    one = sylow_subgroup(group, p, scan_cap)
    if one.order() == 1:
        return (one,)
    rep, _, conj = _class_closure(group, one, scan_cap)
    return tuple(
        rep.conjugated_by(x)
        for _, x in sorted(conj.items(), key=lambda kv: tuple(sorted(kv[0])))
    )
