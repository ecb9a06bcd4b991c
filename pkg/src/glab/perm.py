"""Permutations of {0, ..., n-1} and groups of them.

Composition is left to right: ``(p * q)(x) == q(p(x))``, i.e. ``p * q``
applies p first.  Points sit on the right, so conjugation is
``p.conjugated_by(x) == x.inverse() * p * x``.  All indexing is 0-based
internally; the cycle notation used for parsing and printing is 1-based.

Groups carry a deterministic stabilizer chain (base and strong generating
set).  No randomisation is used anywhere, so orders, membership tests and
element enumerations are reproducible bit for bit.  The chain is built
lazily on first use; concurrent first access at worst repeats the same
deterministic computation before one result is kept.
"""

from __future__ import annotations

import math
from functools import reduce

from .config import (
    CapExceeded,
    ContainmentError,
    DegreeMismatch,
    effective_scan_cap,
)


class Permutation:
    """An immutable permutation, stored as its tuple of images."""

    __slots__ = ("_images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation needs at least one point")
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
        self._images = images

    @classmethod
    def _make(cls, images):
        # fast path for internally built image tuples, skips validation
        p = object.__new__(cls)
        p._images = images
        return p

    @classmethod
    def identity(cls, degree):
        return cls._make(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build from 0-based cycles, e.g. ``from_cycles(4, [(0, 1), (2, 3)])``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} outside 0..{degree - 1}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
        return cls._make(tuple(images))

    @property
    def images(self):
        return self._images

    @property
    def degree(self):
        return len(self._images)

    def __call__(self, point):
        return self._images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        q = other._images
        if len(q) != len(self._images):
            raise DegreeMismatch(
                f"degree {len(self._images)} vs {len(q)}"
            )
        return Permutation._make(tuple(q[i] for i in self._images))

    def inverse(self):
        inv = [0] * len(self._images)
        for i, img in enumerate(self._images):
            inv[img] = i
        return Permutation._make(tuple(inv))

    def __pow__(self, n):
        if n == 0:
            return Permutation.identity(self.degree)
        base = self if n > 0 else self.inverse()
        n = abs(n)
        result = Permutation.identity(self.degree)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugated_by(self, x):
        """x^-1 * self * x."""
        return x.inverse() * self * x

    def is_identity(self):
        return all(i == img for i, img in enumerate(self._images))

    def cycles(self):
        """Nontrivial cycles as tuples of 0-based points, canonically ordered."""
        seen = [False] * len(self._images)
        out = []
        for start in range(len(self._images)):
            if seen[start] or self._images[start] == start:
                seen[start] = True
                continue
            cyc = []
            pt = start
            while not seen[pt]:
                seen[pt] = True
                cyc.append(pt)
                pt = self._images[pt]
            out.append(tuple(cyc))
        return tuple(out)

    def order(self):
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def moved_points(self):
        return tuple(i for i, img in enumerate(self._images) if img != i)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __le__(self, other):
        return self._images <= other._images

    def __hash__(self):
        return hash(self._images)

    def __repr__(self):
        return f"Permutation[{format_cycles(self)}]"


def parse_cycles(text, degree):
    """Parse 1-based cycle notation like ``(1 2)(3 4)`` into a Permutation.

    Points may be separated by spaces or commas; ``()`` is the identity.
    """
    pts = []
    cycles = []
    cur = None
    num = ""

    def flush_num():
        nonlocal num
        if num:
            if cur is None:
                raise ValueError(f"point {num} outside parentheses in {text!r}")
            cur.append(int(num) - 1)
            num = ""

    for ch in text:
        if ch.isdigit():
            if cur is None:
                raise ValueError(f"digit outside parentheses in {text!r}")
            num += ch
        elif ch == "(":
            if cur is not None:
                raise ValueError(f"nested parenthesis in {text!r}")
            cur = []
        elif ch == ")":
            flush_num()
            if cur is None:
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            if cur:
                cycles.append(tuple(cur))
                pts.extend(cur)
            cur = None
        elif ch in " ,":
            flush_num()
        else:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
    if cur is not None:
        raise ValueError(f"unbalanced parenthesis in {text!r}")
    for pt in pts:
        if pt < 0:
            raise ValueError(f"points are 1-based in {text!r}")
        if pt >= degree:
            raise ValueError(f"point {pt + 1} exceeds degree {degree}")
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p):
    """1-based cycle notation; the identity prints as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(pt + 1) for pt in c) + ")" for c in cycles)


class StabilizerChain:
    """Deterministic base and strong generating set for a permutation group.

    Built with the classic Schreier-Sims procedure: base points are always
    the smallest moved points available, orbits grow breadth first with
    generators tried in list order, and Schreier generators are sifted in
    that same order.  Identical generator lists therefore always produce
    identical chains.
    """

    def __init__(self, degree, generators):
        self.degree = degree
        self.base = []
        self._gens = []       # _gens[i]: strong generators fixing base[:i]
        self._trans = []      # _trans[i]: point -> (u, u_inv), base[i]^u = point
        self._orbit_order = []  # _orbit_order[i]: orbit points in BFS order
        gens = []
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree}, chain degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        for g in gens:
            if all(g(b) == b for b in self.base):
                moved = g.moved_points()
                self._append_level(moved[0])
        for i in range(len(self.base)):
            prefix = self.base[:i]
            self._gens[i] = [g for g in gens if all(g(b) == b for b in prefix)]
        for i in reversed(range(len(self.base))):
            self._complete_level(i)

    def _append_level(self, point):
        self.base.append(point)
        self._gens.append([])
        self._trans.append({})
        self._orbit_order.append([])

    def _rebuild_orbit(self, i):
        pt = self.base[i]
        gens = self._gens[i]
        ident = Permutation.identity(self.degree)
        trans = {pt: (ident, ident)}
        order = [pt]
        head = 0
        while head < len(order):
            cur = order[head]
            head += 1
            u = trans[cur][0]
            for s in gens:
                img = s(cur)
                if img not in trans:
                    v = u * s
                    trans[img] = (v, v.inverse())
                    order.append(img)
        self._trans[i] = trans
        self._orbit_order[i] = order

    def _strip(self, p, start=0):
        g = p
        for i in range(start, len(self.base)):
            img = g(self.base[i])
            entry = self._trans[i].get(img)
            if entry is None:
                return g, i
            g = g * entry[1]
        return g, len(self.base)

    def _complete_level(self, i):
        # Verify that the stabilizer of base[i] in <_gens[i]> is generated by
        # _gens[i+1], adding new strong generators where sifting leaves a
        # nontrivial residue.  Assumes deeper levels are already complete.
        self._rebuild_orbit(i)
        orbit = self._orbit_order[i]
        trans = self._trans[i]
        for gamma in orbit:
            u = trans[gamma][0]
            for s in self._gens[i]:
                delta = s(gamma)
                schreier = u * s * trans[delta][1]
                if schreier.is_identity():
                    continue
                h, j = self._strip(schreier, i + 1)
                if h.is_identity():
                    continue
                if j == len(self.base):
                    self._append_level(h.moved_points()[0])
                for k in range(i + 1, j + 1):
                    self._gens[k].append(h)
                for k in range(j, i, -1):
                    self._complete_level(k)

    def order(self):
        n = 1
        for trans in self._trans:
            n *= len(trans)
        return n

    def contains(self, p):
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} vs chain degree {self.degree}")
        residue, _ = self._strip(p)
        return residue.is_identity()

    def iter_elements(self):
        """All elements, as products of transversal representatives."""
        elems = [Permutation.identity(self.degree)]
        for i in reversed(range(len(self.base))):
            trans = self._trans[i]
            order = self._orbit_order[i]
            elems = [h * trans[pt][0] for pt in order for h in elems]
        return elems


class PermGroup:
    """A finite permutation group given by generators.

    Value semantics: two PermGroup objects are equal when they have the same
    degree and the same generator tuple.  Use :meth:`key` to compare the
    underlying element sets.
    """

    __slots__ = ("_degree", "_gens", "_chain", "_sorted_elements", "_key")

    def __init__(self, degree, generators=()):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = []
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree}, group degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self._degree = degree
        self._gens = tuple(gens)
        self._chain = None
        self._sorted_elements = None
        self._key = None

    @classmethod
    def trivial(cls, degree):
        return cls(degree, ())

    @property
    def degree(self):
        return self._degree

    @property
    def generators(self):
        return self._gens

    @property
    def chain(self):
        chain = self._chain
        if chain is None:
            chain = StabilizerChain(self._degree, self._gens)
            self._chain = chain
        return chain

    def order(self):
        return self.chain.order()

    def is_trivial(self):
        return not self._gens

    def identity(self):
        return Permutation.identity(self._degree)

    def contains(self, p):
        return self.chain.contains(p)

    def elements(self, scan_cap=None):
        """All elements, sorted by image tuple.  Guarded by the scan cap."""
        if self._sorted_elements is None:
            cap = effective_scan_cap(scan_cap)
            n = self.order()
            if n > cap:
                raise CapExceeded("element enumeration", n, cap)
            self._sorted_elements = tuple(sorted(self.chain.iter_elements()))
        return self._sorted_elements

    def key(self, scan_cap=None):
        """Frozenset of image tuples; canonical identity of the element set."""
        if self._key is None:
            self._key = frozenset(p.images for p in self.elements(scan_cap))
        return self._key

    def is_subgroup_of(self, other):
        if other.degree != self._degree:
            raise DegreeMismatch(f"degree {self._degree} vs {other.degree}")
        return all(other.contains(g) for g in self._gens)

    def normalizes(self, other):
        """True when conjugation by every generator of self fixes ``other``."""
        for x in self._gens:
            for h in other.generators:
                if not other.contains(h.conjugated_by(x)):
                    return False
        return True

    def is_normal_in(self, ambient):
        if not self.is_subgroup_of(ambient):
            return False
        return ambient.normalizes(self)

    def conjugated_by(self, x):
        return PermGroup(self._degree, tuple(g.conjugated_by(x) for g in self._gens))

    def orbit(self, point):
        """Orbit of a point, in BFS discovery order."""
        seen = {point}
        order = [point]
        head = 0
        while head < len(order):
            cur = order[head]
            head += 1
            for g in self._gens:
                img = g(cur)
                if img not in seen:
                    seen.add(img)
                    order.append(img)
        return tuple(order)

    def orbits(self):
        """All point orbits, each sorted, ordered by smallest point."""
        remaining = set(range(self._degree))
        out = []
        while remaining:
            pt = min(remaining)
            orb = sorted(self.orbit(pt))
            out.append(tuple(orb))
            remaining.difference_update(orb)
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, PermGroup)
            and self._degree == other._degree
            and self._gens == other._gens
        )

    def __hash__(self):
        return hash((self._degree, self._gens))

    def __repr__(self):
        order = self._chain.order() if self._chain is not None else "?"
        gens = ", ".join(format_cycles(g) for g in self._gens[:4])
        if len(self._gens) > 4:
            gens += ", ..."
        return f"PermGroup(degree={self._degree}, order={order}, gens=[{gens}])"


def compose(p, q):
    """p * q: apply p first, then q."""
    return p * q


def generated(degree, elements):
    """The group generated by the given permutations."""
    return PermGroup(degree, tuple(elements))


def group_order(group):
    return group.order()


def contains(group, p):
    return group.contains(p)


def _require_same_degree(*groups):
    deg = groups[0].degree
    for g in groups[1:]:
        if g.degree != deg:
            raise DegreeMismatch(f"degree {deg} vs {g.degree}")
    return deg


def _reduce_generators(degree, elements):
    """Pick a small generating subset of an element list, in given order."""
    gens = []
    grp = PermGroup(degree, ())
    for e in elements:
        if not e.is_identity() and not grp.contains(e):
            gens.append(e)
            grp = PermGroup(degree, tuple(gens))
    return grp


def _normalizes(x, subgroup):
    for h in subgroup.generators:
        if not subgroup.contains(h.conjugated_by(x)):
            return False
    return True


def _normalizer_scan(group, subgroup, scan_cap):
    found = [x for x in group.elements(scan_cap) if _normalizes(x, subgroup)]
    return _reduce_generators(group.degree, found)


def _orbit_labels(subgroup):
    """Per point: (orbit size, orbit id) under the subgroup."""
    label = [0] * subgroup.degree
    size = [0] * subgroup.degree
    for idx, orb in enumerate(subgroup.orbits()):
        for pt in orb:
            label[pt] = idx
            size[pt] = len(orb)
    return label, size


def _backtrack_search(group, keep, label_dom, size_dom, label_img, size_img):
    """DFS over the stabilizer chain of ``group``.

    Yields every element g for which ``keep(g)`` is true, pruning branches
    where some base point's image lands in an orbit of the wrong size or
    breaks the orbit partition correspondence (domain orbits via
    ``label_dom``, image orbits via ``label_img``).  Pruning is sound for
    any ``keep`` that forces domain orbits onto image orbits, which holds
    for normalizing and for subgroup-conjugating elements.
    """
    chain = group.chain
    base = chain.base
    found = []

    def dfs(depth, tail, assigned):
        if depth == len(base):
            g = tail if tail is not None else group.identity()
            if keep(g):
                found.append(g)
            return
        b = base[depth]
        for gamma in chain._orbit_order[depth]:
            img = tail(gamma) if tail is not None else gamma
            if size_dom[b] != size_img[img]:
                continue
            ok = True
            for bj, ij in assigned:
                if (label_dom[bj] == label_dom[b]) != (label_img[ij] == label_img[img]):
                    ok = False
                    break
            if not ok:
                continue
            u = chain._trans[depth][gamma][0]
            dfs(depth + 1, u * tail if tail is not None else u, assigned + [(b, img)])

    dfs(0, None, [])
    return found


def normalizer(group, subgroup, scan_cap=None, method=None):
    """The normalizer of ``subgroup`` taken inside ``group``.

    ``subgroup`` need not be contained in ``group``.  Groups within the scan
    cap are handled by an exhaustive element scan; larger groups fall back
    to an orbit-refined backtrack over the stabilizer chain.  ``method`` can
    force ``"scan"`` or ``"backtrack"`` explicitly.
    """
    _require_same_degree(group, subgroup)
    cap = effective_scan_cap(scan_cap)
    if method is None:
        method = "scan" if group.order() <= cap else "backtrack"
    if method == "scan":
        return _normalizer_scan(group, subgroup, cap)
    if method != "backtrack":
        raise ValueError(f"unknown method {method!r}")
    label, size = _orbit_labels(subgroup)
    found = _backtrack_search(
        group,
        lambda g: _normalizes(g, subgroup),
        label, size, label, size,
    )
    return _reduce_generators(group.degree, sorted(found))


def _conjugates_into(x, source, target):
    for h in source.generators:
        if not target.contains(h.conjugated_by(x)):
            return False
    return True


def are_conjugate_subgroups(group, left, right, scan_cap=None, method=None):
    """A g in ``group`` with left^g == right, or None if there is none.

    Both subgroups must be contained in ``group``.  The witness returned is
    the first under the deterministic search order, so repeated runs agree.
    """
    _require_same_degree(group, left, right)
    if not left.is_subgroup_of(group):
        raise ContainmentError("left subgroup not contained in the group")
    if not right.is_subgroup_of(group):
        raise ContainmentError("right subgroup not contained in the group")
    if left.order() != right.order():
        return None
    cap = effective_scan_cap(scan_cap)
    if method is None:
        method = "scan" if group.order() <= cap else "backtrack"
    if method == "scan":
        for x in group.elements(cap):
            if _conjugates_into(x, left, right):
                return x
        return None
    if method != "backtrack":
        raise ValueError(f"unknown method {method!r}")
    label_l, size_l = _orbit_labels(left)
    label_r, size_r = _orbit_labels(right)
    found = _backtrack_search(
        group,
        lambda g: _conjugates_into(g, left, right),
        label_l, size_l, label_r, size_r,
    )
    return min(found) if found else None


def intersection(left, right, scan_cap=None):
    """The intersection of two permutation groups of the same degree."""
    deg = _require_same_degree(left, right)
    small, big = (left, right) if left.order() <= right.order() else (right, left)
    common = [x for x in small.elements(scan_cap) if big.contains(x)]
    return _reduce_generators(deg, common)


def centralizer(group, element, scan_cap=None):
    """All elements of ``group`` commuting with ``element``."""
    found = [x for x in group.elements(scan_cap) if x * element == element * x]
    return _reduce_generators(group.degree, found)
