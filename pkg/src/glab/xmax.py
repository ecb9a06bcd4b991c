"""Maximal X-subgroups and submaximality relative to ambient witnesses.

Two independent routes to X-maximality are kept deliberately separate:

- the lattice route filters a full subgroup enumeration and keeps the
  class-maximal members — exhaustive, bounded by the lattice cap;
- the certification route checks a single candidate by one-element
  extensions over coset representatives — no lattice, scales to groups far
  beyond the cap.

Submaximality is exposed only relative to a declared ambient overgroup:
the defining existential ("some overgroup exists") ranges over all finite
groups and is not searchable.  The one exactly-computable case is an
almost simple group, where every relevant overgroup embeds in the
automorphism group of the socle, making the quantifier finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalog import _shift, direct_product
from .config import CapExceeded, ContainmentError, effective_scan_cap
from .lattice import enumerate_subgroups
from .perm import PermGroup, generated, intersection
from .structure import is_simple, is_subnormal, minimal_normal_subgroups, quotient
from .xclass import _is_prime


@lru_cache(maxsize=None)
def cached_lattice(group, lattice_cap=None, scan_cap=None):
    """Subgroup lattices are expensive; share them across checks."""
    return enumerate_subgroups(group, lattice_cap, scan_cap)


def certify_x_maximal(spec, group, subgroup, scan_cap=None):
    """Decide X-maximality of a candidate by one-element extensions.

    Sound and complete because the class is subgroup-closed: any strictly
    larger X-subgroup contains some <subgroup, g> that is itself in X.
    Extensions by elements of the same right coset generate the same
    subgroup, so one representative per coset suffices.
    """
    if not subgroup.is_subgroup_of(group):
        raise ContainmentError("candidate not contained in the group")
    if not spec.is_member(subgroup):
        raise ValueError(f"candidate is not a member of {spec}")
    cap = effective_scan_cap(scan_cap)
    index = group.order() // subgroup.order()
    if index > cap:
        raise CapExceeded("coset enumeration", index, cap)
    if subgroup.order() > cap:
        raise CapExceeded("coset canonicalization", subgroup.order(), cap)
    if index == 1:
        return True
    sub_elems = subgroup.elements(scan_cap)

    def canon(g):
        return min(h * g for h in sub_elems)

    base_gens = tuple(subgroup.generators)
    ident = canon(group.identity())
    seen = {ident.images}
    frontier = [ident]
    while frontier:
        rep = frontier.pop()
        for g in group.generators:
            nxt = canon(rep * g)
            if nxt.images in seen:
                continue
            seen.add(nxt.images)
            frontier.append(nxt)
            extension = generated(group.degree, base_gens + (nxt,))
            if spec.is_member(extension):
                return False
    return True


def maximal_x_subgroups(spec, group, lattice_cap=None, scan_cap=None):
    """All X-maximal subgroups up to conjugacy, as lattice classes.

    A class is kept when its representative lies in the class family and
    no conjugate of it is properly contained in another member class;
    containment up to conjugacy is an element-set inclusion test against
    the stored conjugate keys.
    """
    lattice = cached_lattice(group, lattice_cap, scan_cap)
    members = [
        cls for cls in lattice.classes if spec.is_member(cls.representative)
    ]
    out = []
    for cls in members:
        key = cls.representative.key(scan_cap)
        dominated = False
        for other in members:
            if other.order <= cls.order:
                continue
            if any(key <= conj_key for conj_key in other.conjugates):
                dominated = True
                break
        if dominated:
            continue
        out.append(cls)
    return tuple(out)


def all_maximal_x_subgroups(spec, group, lattice_cap=None, scan_cap=None):
    """Every X-maximal subgroup (all conjugates), in deterministic order."""
    out = []
    for cls in maximal_x_subgroups(spec, group, lattice_cap, scan_cap):
        for _, x in sorted(
            cls.conjugates.items(), key=lambda kv: tuple(sorted(kv[0]))
        ):
            out.append(cls.representative.conjugated_by(x))
    return tuple(out)


def maximal_subgroup_classes(group, lattice_cap=None, scan_cap=None):
    """Classes of maximal (proper) subgroups, by the same inclusion filter."""
    lattice = cached_lattice(group, lattice_cap, scan_cap)
    proper = [cls for cls in lattice.classes if cls.order < group.order()]
    out = []
    for cls in proper:
        key = cls.representative.key(scan_cap)
        dominated = any(
            other.order > cls.order
            and any(key <= conj_key for conj_key in other.conjugates)
            for other in proper
        )
        if not dominated:
            out.append(cls)
    return tuple(out)


@dataclass(frozen=True)
class AmbientWitness:
    """One submaximal X-subgroup together with everything that certifies it.

    ``result`` is the intersection ``witness_max`` ∩ ``embedded`` where
    ``witness_max`` is X-maximal in ``ambient`` and ``embedded`` sits
    normally (mode "normal") or subnormally (mode "subnormal") inside
    ``ambient``.
    """

    ambient: PermGroup
    embedded: PermGroup
    mode: str
    witness_max: PermGroup
    result: PermGroup

    def __post_init__(self):
        if self.mode not in ("normal", "subnormal"):
            raise ValueError(f"unknown mode {self.mode!r}")


def submax_in_ambient(
    spec, ambient, embedded, mode="normal", lattice_cap=None, scan_cap=None
):
    """{K ∩ G : K X-maximal in G*}, for G sitting (sub)normally in G*.

    Returns one witness per distinct intersection.  With G* = G this is
    exactly the set of X-maximal subgroups of G.
    """
    if not embedded.is_subgroup_of(ambient):
        raise ContainmentError("embedded group not contained in the ambient")
    if mode == "normal":
        if not embedded.is_normal_in(ambient):
            raise ValueError("embedded group is not normal in the ambient")
    elif mode == "subnormal":
        if not is_subnormal(ambient, embedded).ok:
            raise ValueError("embedded group is not subnormal in the ambient")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    witnesses = []
    seen = set()
    for cls in maximal_x_subgroups(spec, ambient, lattice_cap, scan_cap):
        for _, x in sorted(
            cls.conjugates.items(), key=lambda kv: tuple(sorted(kv[0]))
        ):
            k = cls.representative.conjugated_by(x)
            cut = intersection(k, embedded, scan_cap)
            key = cut.key(scan_cap)
            if key in seen:
                continue
            seen.add(key)
            witnesses.append(AmbientWitness(ambient, embedded, mode, k, cut))
    return tuple(witnesses)


def socle(group, scan_cap=None):
    """The unique minimal normal subgroup; errors when not unique."""
    mins = minimal_normal_subgroups(group, scan_cap)
    if len(mins) != 1:
        raise ValueError(f"socle is not a single minimal normal subgroup ({len(mins)} found)")
    return mins[0]


def strong_submax_almost_simple(
    spec, group, aut, lattice_cap=None, scan_cap=None
):
    """All strongly submaximal X-subgroups of an almost simple group.

    For S ≤ G ≤ Aut(S) with S nonabelian simple and S outside the class,
    every normal overgroup needed by the definition may be taken between G
    and Aut(S); the union of {K ∩ G : K X-maximal in G*} over the finitely
    many G* with G normal in G* ≤ Aut(S) is therefore the exact answer,
    with no unbounded quantifier left.
    """
    s = socle(group, scan_cap)
    if not (is_simple(s, scan_cap) and not _is_prime(s.order())):
        raise ValueError("socle is not nonabelian simple")
    if spec.is_member(s):
        raise ValueError(f"socle lies in {spec}; the search hypothesis fails")
    if not group.is_subgroup_of(aut):
        raise ContainmentError("group not contained in the automorphism realization")
    if not s.is_normal_in(aut):
        raise ValueError("socle is not normal in the automorphism realization")
    q = quotient(aut, s, scan_cap)
    g_image = q.image_subgroup(group)
    overgroups = []
    outer_lattice = enumerate_subgroups(q.image_group, lattice_cap, scan_cap)
    seen_over = set()
    for cls in outer_lattice.classes:
        for sub, _ in cls.members():
            if not g_image.is_subgroup_of(sub):
                continue
            key = sub.key(scan_cap)
            if key in seen_over:
                continue
            seen_over.add(key)
            candidate = q.preimage_subgroup(sub)
            if group.is_normal_in(candidate):
                overgroups.append(candidate)
    overgroups.sort(key=lambda g: (g.order(), tuple(sorted(g.key(scan_cap)))))
    witnesses = []
    seen = set()
    for star in overgroups:
        for w in submax_in_ambient(
            spec, star, group, "normal", lattice_cap, scan_cap
        ):
            key = w.result.key(scan_cap)
            if key not in seen:
                seen.add(key)
                witnesses.append(w)
    return tuple(witnesses)


def direct_product_submax(spec, parts, scan_cap=None):
    """Combine per-factor submaximality witnesses across a direct product.

    ``parts`` is one list of AmbientWitness per factor; all witnesses in a
    part must concern the same embedded factor group.  For every choice of
    one witness per part the outputs are the products H_1 x ... x H_n,
    witnessed inside the product ambient G_1* x ... x G_n* by the product
    of the per-factor X-maximal subgroups.
    """
    if not parts:
        raise ValueError("need at least one factor")
    for part in parts:
        if not part:
            raise ValueError("every factor needs at least one witness")
        first = part[0]
        for w in part:
            if w.embedded.key(scan_cap) != first.embedded.key(scan_cap):
                raise ValueError(
                    "witnesses within a factor must share the embedded group"
                )
    combos = [()]
    for part in parts:
        combos = [c + (w,) for c in combos for w in part]
    out = []
    seen = set()
    for combo in combos:
        ambient = direct_product(*(w.ambient for w in combo))
        offsets = []
        pos = 0
        for w in combo:
            offsets.append(pos)
            pos += w.ambient.degree
        total = ambient.degree
        embedded = _shifted_product((w.embedded for w in combo), offsets, total)
        witness_max = _shifted_product((w.witness_max for w in combo), offsets, total)
        result = _shifted_product((w.result for w in combo), offsets, total)
        mode = (
            "normal"
            if all(w.mode == "normal" for w in combo)
            else "subnormal"
        )
        key = result.key(scan_cap)
        if key in seen:
            continue
        seen.add(key)
        out.append(AmbientWitness(ambient, embedded, mode, witness_max, result))
    return tuple(out)


def _shifted_product(groups, offsets, total):
    gens = []
    for g, offset in zip(groups, offsets):
        gens.extend(_shift(p, offset, total) for p in g.generators)
    return PermGroup(total, tuple(gens))


def result_keys(witnesses, scan_cap=None):
    """The set of element-set keys of the witnessed results."""
    return {w.result.key(scan_cap) for w in witnesses}
