"""Normal structure: closures, subnormality, series, quotients, projections.

Quotient groups are realised through the right-multiplication action on
cosets of the kernel, with each coset represented by its lexicographically
smallest element.  That canonical labelling makes images of subgroups in a
fixed quotient directly comparable as permutation groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import CapExceeded, ContainmentError, effective_scan_cap
from .perm import PermGroup, Permutation, generated, intersection


def normal_closure(group, subgroup):
    """Smallest subgroup of ``group`` containing ``subgroup`` and normal in it."""
    if not subgroup.is_subgroup_of(group):
        raise ContainmentError("closure argument not contained in the group")
    gens = list(subgroup.generators)
    closure = PermGroup(group.degree, tuple(gens))
    queue = list(gens)
    while queue:
        a = queue.pop(0)
        for g in group.generators:
            c = a.conjugated_by(g)
            if not closure.contains(c):
                gens.append(c)
                closure = PermGroup(group.degree, tuple(gens))
                queue.append(c)
    return closure


@dataclass(frozen=True)
class SubnormalityResult:
    """Outcome of a subnormality test, with the fastest descending chain."""

    ok: bool
    chain: tuple

    def __bool__(self):
        return self.ok

    @property
    def depth(self):
        return len(self.chain) - 1


def is_subnormal(group, subgroup):
    """Test subnormality via iterated normal closures.

    The closures G >= <A^G> >= <A^(A^G)> >= ... form the fastest descending
    chain of witnesses; the subgroup is subnormal exactly when the chain
    stabilises at the subgroup itself.
    """
    if not subgroup.is_subgroup_of(group):
        raise ContainmentError("subnormality argument not contained in the group")
    chain = [group]
    current = group
    while current.order() != subgroup.order():
        nxt = normal_closure(current, subgroup)
        if nxt.order() == current.order():
            return SubnormalityResult(False, tuple(chain))
        chain.append(nxt)
        current = nxt
    return SubnormalityResult(True, tuple(chain))


def derived_subgroup(group):
    """The commutator subgroup."""
    comms = []
    for a in group.generators:
        for b in group.generators:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    return normal_closure(group, PermGroup(group.degree, tuple(comms)))


def is_solvable(group):
    """True when the derived series reaches the trivial group."""
    current = group
    while current.order() > 1:
        nxt = derived_subgroup(current)
        if nxt.order() == current.order():
            return False
        current = nxt
    return True


def conjugacy_class_reps(group, scan_cap=None):
    """Representatives of the conjugacy classes of elements.

    Each representative is the smallest element of its class under image
    tuple order (so the identity comes first).
    """
    elems = group.elements(scan_cap)
    seen = set()
    reps = []
    for x in elems:
        if x.images in seen:
            continue
        reps.append(x)
        frontier = [x]
        seen.add(x.images)
        while frontier:
            cur = frontier.pop()
            for g in group.generators:
                y = cur.conjugated_by(g)
                if y.images not in seen:
                    seen.add(y.images)
                    frontier.append(y)
    return tuple(reps)


def minimal_normal_subgroups(group, scan_cap=None):
    """The minimal nontrivial normal subgroups.

    Every minimal normal subgroup is the normal closure of a single
    nontrivial element, so normal closures of class representatives are a
    complete candidate set.
    """
    if group.order() <= 1:
        raise ValueError("the trivial group has no minimal normal subgroups")
    candidates = {}
    for x in conjugacy_class_reps(group, scan_cap):
        if x.is_identity():
            continue
        n = normal_closure(group, PermGroup(group.degree, (x,)))
        candidates.setdefault(n.key(scan_cap), n)
    minimal = []
    for key, n in candidates.items():
        if not any(other < key for other in candidates):
            minimal.append(n)
    minimal.sort(key=lambda n: (n.order(), tuple(sorted(n.key()))))
    return tuple(minimal)


def normal_subgroups(group, scan_cap=None):
    """All normal subgroups, sorted by order.

    Normal closures of single conjugacy classes are the atoms: every normal
    subgroup is a join of them, so closing the atom set under pairwise join
    enumerates everything.
    """
    degree = group.degree
    trivial = PermGroup.trivial(degree)
    found = {trivial.key(): trivial}
    for x in conjugacy_class_reps(group, scan_cap):
        if x.is_identity():
            continue
        n = normal_closure(group, PermGroup(degree, (x,)))
        found.setdefault(n.key(scan_cap), n)
    changed = True
    while changed:
        changed = False
        current = sorted(found.values(), key=lambda n: (n.order(), tuple(sorted(n.key()))))
        for i, a in enumerate(current):
            for b in current[i + 1:]:
                if a.key() <= b.key() or b.key() <= a.key():
                    continue
                join = generated(degree, a.generators + b.generators)
                key = join.key(scan_cap)
                if key not in found:
                    found[key] = join
                    changed = True
    out = sorted(found.values(), key=lambda n: (n.order(), tuple(sorted(n.key()))))
    return tuple(out)


def is_simple(group, scan_cap=None):
    """True when the group is nontrivial and has no proper nontrivial normal subgroup."""
    if group.order() <= 1:
        return False
    for x in conjugacy_class_reps(group, scan_cap):
        if x.is_identity():
            continue
        n = normal_closure(group, PermGroup(group.degree, (x,)))
        if n.order() != group.order():
            return False
    return True


class QuotientMap:
    """The quotient of a group by a normal subgroup, as a coset action.

    The image group acts on the right cosets of the kernel by right
    multiplication; since the kernel is the point stabilizer of coset 0 and
    maps to the identity, the image action is regular.  Coset labels follow
    breadth-first discovery from the identity coset, with every coset named
    by its minimal element, so equal inputs yield identical labellings.
    """

    def __init__(self, domain, kernel, scan_cap=None):
        if not kernel.is_subgroup_of(domain):
            raise ContainmentError("kernel not contained in the domain")
        if not kernel.is_normal_in(domain):
            raise ValueError("kernel is not normal in the domain")
        self.domain = domain
        self.kernel = kernel
        self._trivial_kernel = kernel.order() == 1
        if self._trivial_kernel:
            self.image_group = domain
            self.image_of_generators = domain.generators
            self._reps = None
            self._index = None
            return
        cap = effective_scan_cap(scan_cap)
        index = domain.order() // kernel.order()
        if index > cap:
            raise CapExceeded("coset enumeration", index, cap)
        kernel_elems = kernel.elements(scan_cap)
        self._kernel_elems = kernel_elems

        def canon(g):
            return min(k * g for k in kernel_elems)

        reps = [canon(domain.identity())]
        idx = {reps[0].images: 0}
        head = 0
        while head < len(reps):
            r = reps[head]
            head += 1
            for g in domain.generators:
                c = canon(r * g)
                if c.images not in idx:
                    idx[c.images] = len(reps)
                    reps.append(c)
        self._reps = reps
        self._index = idx
        self._canon = canon
        images = [self._image_perm(g) for g in domain.generators]
        self.image_of_generators = tuple(images)
        self.image_group = PermGroup(len(reps), tuple(images))
        if self.image_group.order() != index:
            raise AssertionError("coset action order mismatch")

    def _image_perm(self, x):
        return Permutation._make(
            tuple(self._index[self._canon(r * x).images] for r in self._reps)
        )

    def image_of(self, x):
        """Image of a domain element in the quotient."""
        if self._trivial_kernel:
            return x
        return self._image_perm(x)

    def image_subgroup(self, subgroup):
        """Image of a subgroup of the domain."""
        if self._trivial_kernel:
            return subgroup
        return PermGroup(
            len(self._reps),
            tuple(self._image_perm(g) for g in subgroup.generators),
        )

    def preimage_of(self, image_element):
        """A domain element mapping to the given image element.

        The image action is regular, so the element is determined by where
        it sends coset 0; the stored minimal coset representative is the
        canonical preimage.
        """
        if self._trivial_kernel:
            return image_element
        return self._reps[image_element(0)]

    def preimage_subgroup(self, image_subgroup):
        """Full preimage of a subgroup of the image."""
        if self._trivial_kernel:
            return image_subgroup
        gens = list(self.kernel.generators)
        gens.extend(self.preimage_of(u) for u in image_subgroup.generators)
        return PermGroup(self.domain.degree, tuple(gens))

    @property
    def index(self):
        return self.image_group.order() if not self._trivial_kernel else self.domain.order()


def quotient(group, kernel, scan_cap=None):
    """Quotient map of a group by a normal subgroup.

    With a trivial kernel the map is the identity on the original group,
    keeping the natural action instead of inflating to a regular one.
    """
    return QuotientMap(group, kernel, scan_cap)


@dataclass
class SubnormalSeries:
    """A descending chain G = G_0 > G_1 > ... > G_n with each term normal in the last."""

    terms: tuple
    _factors: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.terms = tuple(self.terms)
        if len(self.terms) < 1:
            raise ValueError("series needs at least one term")
        for upper, lower in zip(self.terms, self.terms[1:]):
            if not lower.is_normal_in(upper):
                raise ValueError("series term not normal in its predecessor")

    @property
    def ambient(self):
        return self.terms[0]

    @property
    def length(self):
        return len(self.terms) - 1

    def factor_orders(self):
        return tuple(
            upper.order() // lower.order()
            for upper, lower in zip(self.terms, self.terms[1:])
        )

    def factor(self, i, scan_cap=None):
        """Quotient map G_{i-1} -> G_{i-1}/G_i for 1 <= i <= length."""
        if not 1 <= i <= self.length:
            raise IndexError(f"factor index {i} outside 1..{self.length}")
        if i not in self._factors:
            self._factors[i] = quotient(self.terms[i - 1], self.terms[i], scan_cap)
        return self._factors[i]


def _canonical_sort_key(group):
    return tuple(sorted(group.key()))


def composition_series(group, scan_cap=None, prefer="max"):
    """A composition series, chosen deterministically.

    At each step the next term is a maximal proper normal subgroup of the
    current one; ``prefer="max"`` picks the largest such (ties broken by
    element-set order), ``prefer="min"`` the smallest.  Both choices yield
    valid composition series; the factor-order multiset is the same either
    way.
    """
    terms = [group]
    current = group
    while current.order() > 1:
        normals = normal_subgroups(current, scan_cap)
        proper = [n for n in normals if n.order() < current.order()]
        keys = {n.key(): n for n in proper}
        maximal = [
            n for n in proper
            if not any(n.key() < other for other in keys if other != n.key())
        ]
        if prefer == "max":
            maximal.sort(key=lambda n: (-n.order(), _canonical_sort_key(n)))
        elif prefer == "min":
            maximal.sort(key=lambda n: (n.order(), _canonical_sort_key(n)))
        else:
            raise ValueError(f"unknown preference {prefer!r}")
        current = maximal[0]
        terms.append(current)
    return SubnormalSeries(tuple(terms))


def project(series, subgroup, i, scan_cap=None):
    """The i-th projection (H n G_{i-1}) G_i / G_i of a subgroup H.

    Returned inside the canonical quotient of the i-th factor, so two
    subgroups of the same ambient group have literally comparable
    projections.
    """
    if not subgroup.is_subgroup_of(series.ambient):
        raise ContainmentError("subgroup not contained in the series ambient")
    if not 1 <= i <= series.length:
        raise IndexError(f"projection index {i} outside 1..{series.length}")
    cut = intersection(subgroup, series.terms[i - 1], scan_cap)
    return series.factor(i, scan_cap).image_subgroup(cut)
