"""Theorem-verification harness.

Each check function verifies one statement about maximal X-subgroups on a
concrete instance and returns a VerificationReport.  A failing report
carries a witness payload (generator lists in cycle notation, offending
indices and primes) sufficient to replay the single instance by hand.

Quantifier handling is the load-bearing design point.  Statements range
over pairs (A, H) of subgroups; both the property checked and the witness
sets are conjugation-covariant, so A may be fixed to one representative
per conjugacy class as long as H still ranges over *all* conjugates of
the maximal classes.  Projections along a fixed series are not
conjugation-covariant, so the projection check keeps both quantifiers
full.  Where full subgroup enumeration is impossible (groups above the
lattice cap), checks accept explicitly supplied subgroup lists and the
report is marked ``restricted``: the verdict then covers the listed
instances only.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from itertools import combinations, product

from .catalog import (
    _shift,
    alternating,
    cyclic,
    default_catalog,
    direct_product,
    mathieu_10,
    projective_gamma_linear_2_9,
    projective_general_linear_2_7,
    projective_general_linear_2_9,
    projective_semilinear_2_9,
    projective_special_linear_2_7,
    projective_special_linear_2_9,
    symmetric,
    wreath_base_subgroup,
    wreath_product,
)
from .config import CapExceeded, effective_scan_cap
from .lattice import _prime_power_dividing, all_sylow_subgroups, sylow_subgroup
from .perm import (
    PermGroup,
    are_conjugate_subgroups,
    format_cycles,
    generated,
    intersection,
    normalizer,
)
from .structure import (
    composition_series,
    is_simple,
    is_subnormal,
    minimal_normal_subgroups,
    normal_subgroups,
    project,
    quotient,
)
from .xclass import (
    ClassSpec,
    _is_prime,
    _primes_of,
    has_no_nontrivial_x_subgroup,
    is_x_separable,
    o_x,
    standard_family,
)
from .xmax import (
    all_maximal_x_subgroups,
    cached_lattice,
    certify_x_maximal,
    direct_product_submax,
    maximal_subgroup_classes,
    maximal_x_subgroups,
    socle,
    submax_in_ambient,
)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check on one instance."""

    check_id: str
    group: str
    class_spec: str
    verdict: str  # "pass" | "fail" | "skipped"
    witness: dict
    wall_time_ms: int
    restricted: bool = False

    @property
    def ok(self):
        return self.verdict != "fail"

    def to_dict(self):
        out = {
            "check_id": self.check_id,
            "group": self.group,
            "class": self.class_spec,
            "verdict": self.verdict,
            "witness": self.witness,
            "wall_time_ms": self.wall_time_ms,
        }
        if self.restricted:
            out["restricted"] = True
        return out


def reports_to_json(reports):
    return json.dumps([r.to_dict() for r in reports], indent=2)


def _label(group, label):
    if label is not None:
        return label
    return f"group(degree={group.degree}, order={group.order()})"


def _gens(group):
    return [format_cycles(p) for p in group.generators] or ["()"]


def _report(check_id, label, spec, t0, verdict, witness, restricted=False):
    ms = int((time.perf_counter() - t0) * 1000)
    spec_str = str(spec) if spec is not None else None
    return VerificationReport(
        check_id, label, spec_str, verdict, witness, ms, restricted
    )


def _index_avoids_pi(index, pi):
    """True when no prime of the class's support divides the index.

    An unbounded support (pi None) contains every prime, so the index must
    then be 1: the quotient may contain no nontrivial subgroup at all.
    """
    if pi is None:
        return index == 1
    return _primes_of(index).isdisjoint(pi)


def _class_members_sorted(cls):
    return [
        cls.representative.conjugated_by(x)
        for _, x in sorted(cls.conjugates.items(), key=lambda kv: tuple(sorted(kv[0])))
    ]


def _subnormal_class_reps(group, lattice_cap=None, scan_cap=None):
    """One representative per conjugacy class of subnormal subgroups."""
    lattice = cached_lattice(group, lattice_cap, scan_cap)
    return [
        cls.representative
        for cls in lattice.classes
        if is_subnormal(group, cls.representative).ok
    ]


def restricted_subnormal_subgroups(group, scan_cap=None):
    """Subnormal subgroups reachable without a subgroup lattice.

    Seeds: terms of a composition series under both tie-breaking
    strategies, plus the minimal normal subgroups.  The seed set is closed
    under conjugation (conjugates of subnormal subgroups are subnormal)
    and then under pairwise intersection (intersections of subnormals are
    subnormal).  This list is complete for the spot-check groups it is
    used on but not in general; reports built from it are flagged.
    """
    by_key = {}

    def register(sub):
        key = sub.key(scan_cap)
        if key not in by_key:
            by_key[key] = sub
        return key

    for prefer in ("max", "min"):
        for term in composition_series(group, scan_cap, prefer=prefer).terms:
            register(term)
    for m in minimal_normal_subgroups(group, scan_cap):
        register(m)

    frontier = list(by_key.values())
    while frontier:
        sub = frontier.pop()
        for g in group.generators:
            conj = sub.conjugated_by(g)
            if conj.key(scan_cap) not in by_key:
                register(conj)
                frontier.append(conj)

    changed = True
    while changed:
        changed = False
        subs = sorted(
            by_key.values(), key=lambda h: (h.order(), tuple(sorted(h.key(scan_cap))))
        )
        for a, b in combinations(subs, 2):
            cut = intersection(a, b, scan_cap)
            if cut.key(scan_cap) not in by_key:
                register(cut)
                changed = True
    return sorted(
        by_key.values(), key=lambda h: (h.order(), tuple(sorted(h.key(scan_cap))))
    )


# ---------------------------------------------------------------------------
# individual checks


def check_wh_subnormal(
    spec,
    group,
    label=None,
    maximals=None,
    subnormals=None,
    lattice_cap=None,
    scan_cap=None,
):
    """For subnormal A and X-maximal H: no prime of the class's support
    divides |N_A(H cap A) : H cap A|."""
    t0 = time.perf_counter()
    label = _label(group, label)
    restricted = maximals is not None or subnormals is not None
    if subnormals is None:
        subnormals = _subnormal_class_reps(group, lattice_cap, scan_cap)
    if maximals is None:
        maximals = all_maximal_x_subgroups(spec, group, lattice_cap, scan_cap)
    pi = spec.pi
    count = 0
    for a in subnormals:
        for h in maximals:
            cut = intersection(h, a, scan_cap)
            nz = normalizer(a, cut, scan_cap)
            index = nz.order() // cut.order()
            count += 1
            if not _index_avoids_pi(index, pi):
                witness = {
                    "subnormal": _gens(a),
                    "maximal": _gens(h),
                    "intersection": _gens(cut),
                    "normalizer_index": index,
                    "offending_primes": sorted(
                        _primes_of(index) if pi is None else _primes_of(index) & pi
                    ),
                }
                return _report(
                    "wh-subnormal", label, spec, t0, "fail", witness, restricted
                )
    witness = {"instances": count}
    return _report("wh-subnormal", label, spec, t0, "pass", witness, restricted)


def check_wh_normal(
    spec,
    group,
    label=None,
    maximals=None,
    normals=None,
    lattice_cap=None,
    scan_cap=None,
):
    """The previous check restricted to normal A.

    Normal subgroups are enumerable without a lattice, so when the
    X-maximal subgroups are supplied (certified externally) this check
    runs on groups far beyond the lattice cap.
    """
    t0 = time.perf_counter()
    label = _label(group, label)
    restricted = maximals is not None or normals is not None
    if normals is None:
        normals = normal_subgroups(group, scan_cap)
    if maximals is None:
        maximals = all_maximal_x_subgroups(spec, group, lattice_cap, scan_cap)
    pi = spec.pi
    count = 0
    for a in normals:
        for h in maximals:
            cut = intersection(h, a, scan_cap)
            nz = normalizer(a, cut, scan_cap)
            index = nz.order() // cut.order()
            count += 1
            if not _index_avoids_pi(index, pi):
                witness = {
                    "normal": _gens(a),
                    "maximal": _gens(h),
                    "intersection": _gens(cut),
                    "normalizer_index": index,
                    "offending_primes": sorted(
                        _primes_of(index) if pi is None else _primes_of(index) & pi
                    ),
                }
                return _report(
                    "wh-normal", label, spec, t0, "fail", witness, restricted
                )
    witness = {"instances": count}
    return _report("wh-normal", label, spec, t0, "pass", witness, restricted)


def check_projection_conjugacy(
    spec, group, series=None, label=None, lattice_cap=None, scan_cap=None
):
    """X-maximal H, K with equal projections into every series factor are
    conjugate inside their join.

    Projections depend on the fixed series and are not conjugation
    covariant, so both quantifiers run over all conjugates.
    """
    t0 = time.perf_counter()
    label = _label(group, label)
    if series is None:
        series = composition_series(group, scan_cap)
    maximals = all_maximal_x_subgroups(spec, group, lattice_cap, scan_cap)
    buckets = {}
    for h in maximals:
        sig = tuple(
            project(series, h, i, scan_cap).key(scan_cap)
            for i in range(1, series.length + 1)
        )
        buckets.setdefault(sig, []).append(h)
    pairs = 0
    for hs in buckets.values():
        for h, k in combinations(hs, 2):
            pairs += 1
            join = generated(group.degree, h.generators + k.generators)
            x = are_conjugate_subgroups(join, h, k, scan_cap)
            if x is None:
                witness = {
                    "left": _gens(h),
                    "right": _gens(k),
                    "join_order": join.order(),
                }
                return _report(
                    "projections", label, spec, t0, "fail", witness
                )
    witness = {
        "maximals": len(maximals),
        "projection_patterns": len(buckets),
        "pairs": pairs,
    }
    return _report("projections", label, spec, t0, "pass", witness)


def check_subnormality_criterion(
    group, label=None, family=None, lattice_cap=None, scan_cap=None
):
    """Three characterizations of subnormality agree on every subgroup:

    (i)   iterated normal closures reach the subgroup;
    (ii)  for every prime p, every Sylow p-subgroup H of the group meets
          the subgroup in one of *its* Sylow p-subgroups;
    (iii) for every class in the family and every X-maximal H, the index
          |N_A(H cap A) : H cap A| avoids the class's prime support.
    """
    t0 = time.perf_counter()
    label = _label(group, label)
    if family is None:
        family = standard_family(group)
    lattice = cached_lattice(group, lattice_cap, scan_cap)
    primes = sorted(_primes_of(group.order()))
    sylows = {p: all_sylow_subgroups(group, p, scan_cap) for p in primes}
    fam_maximals = [
        (spec, all_maximal_x_subgroups(spec, group, lattice_cap, scan_cap))
        for spec in family
    ]
    checked = 0
    for cls in lattice.classes:
        a = cls.representative
        checked += 1
        by_closure = is_subnormal(group, a).ok

        by_sylow = True
        for p in primes:
            want = _prime_power_dividing(p, a.order())
            for h in sylows[p]:
                if intersection(h, a, scan_cap).order() != want:
                    by_sylow = False
                    break
            if not by_sylow:
                break

        by_family = True
        for spec, hs in fam_maximals:
            pi = spec.pi
            for h in hs:
                cut = intersection(h, a, scan_cap)
                index = normalizer(a, cut, scan_cap).order() // cut.order()
                if not _index_avoids_pi(index, pi):
                    by_family = False
                    break
            if not by_family:
                break

        if not (by_closure == by_sylow == by_family):
            witness = {
                "subgroup": _gens(a),
                "by_normal_closures": by_closure,
                "by_sylow_intersections": by_sylow,
                "by_class_family": by_family,
            }
            return _report("subnormality", label, None, t0, "fail", witness)
    witness = {
        "subgroup_classes": checked,
        "family_size": len(family),
    }
    return _report("subnormality", label, None, t0, "pass", witness)


def check_chunikhin(spec, group, label=None, lattice_cap=None, scan_cap=None):
    """In a group separable for the class, the X-maximal subgroups form a
    single conjugacy class.  Non-separable instances are skipped."""
    t0 = time.perf_counter()
    label = _label(group, label)
    if not is_x_separable(spec, group):
        witness = {"reason": "group is not separable for this class"}
        return _report("chunikhin", label, spec, t0, "skipped", witness)
    classes = maximal_x_subgroups(spec, group, lattice_cap, scan_cap)
    if len(classes) != 1:
        witness = {
            "class_count": len(classes),
            "class_orders": [cls.order for cls in classes],
            "representatives": [_gens(cls.representative) for cls in classes],
        }
        return _report("chunikhin", label, spec, t0, "fail", witness)
    witness = {"class_order": classes[0].order, "class_size": classes[0].size}
    return _report("chunikhin", label, spec, t0, "pass", witness)


def check_nontrivial_intersection(
    spec,
    group,
    label=None,
    maximals=None,
    subnormals=None,
    lattice_cap=None,
    scan_cap=None,
):
    """A subnormal subgroup sharing a prime with the class's support meets
    every X-maximal subgroup nontrivially."""
    t0 = time.perf_counter()
    label = _label(group, label)
    restricted = maximals is not None or subnormals is not None
    if subnormals is None:
        subnormals = _subnormal_class_reps(group, lattice_cap, scan_cap)
    if maximals is None:
        maximals = all_maximal_x_subgroups(spec, group, lattice_cap, scan_cap)
    pi = spec.pi
    count = 0
    for a in subnormals:
        shared = _primes_of(a.order()) if pi is None else _primes_of(a.order()) & pi
        if not shared:
            continue
        for h in maximals:
            count += 1
            if intersection(h, a, scan_cap).order() == 1:
                witness = {
                    "subnormal": _gens(a),
                    "maximal": _gens(h),
                    "shared_primes": sorted(shared),
                }
                return _report(
                    "intersection", label, spec, t0, "fail", witness, restricted
                )
    witness = {"instances": count}
    return _report("intersection", label, spec, t0, "pass", witness, restricted)


def _semisimple_pieces(m, scan_cap=None):
    """The unique decomposition of an internal direct product of nonabelian
    simple groups, or None when the subgroup is not one.

    The factors of such a product are exactly its minimal normal
    subgroups, so the decomposition is canonical.  Abelian cases are
    excluded: their decompositions are not unique.
    """
    if m.order() == 1:
        return []
    pieces = minimal_normal_subgroups(m, scan_cap)
    prod = 1
    for s in pieces:
        if not is_simple(s, scan_cap) or _is_prime(s.order()):
            return None
        prod *= s.order()
    if prod != m.order():
        return None
    return pieces


def check_factor_lemma(
    spec,
    group,
    label=None,
    maximals=None,
    subnormals=None,
    lattice_cap=None,
    scan_cap=None,
):
    """For subnormal M = S_1 x ... x S_n with nonabelian simple factors and
    X-maximal H: M cap H is the direct product of the S_i cap H."""
    t0 = time.perf_counter()
    label = _label(group, label)
    restricted = maximals is not None or subnormals is not None
    if subnormals is None:
        subnormals = _subnormal_class_reps(group, lattice_cap, scan_cap)
    if maximals is None:
        maximals = all_maximal_x_subgroups(spec, group, lattice_cap, scan_cap)
    count = 0
    for m in subnormals:
        pieces = _semisimple_pieces(m, scan_cap)
        if pieces is None:
            continue
        for h in maximals:
            count += 1
            lhs = intersection(m, h, scan_cap)
            parts = [intersection(s, h, scan_cap) for s in pieces]
            gens = tuple(g for part in parts for g in part.generators)
            rhs = generated(group.degree, gens)
            order_product = 1
            for part in parts:
                order_product *= part.order()
            if rhs.key(scan_cap) != lhs.key(scan_cap) or order_product != lhs.order():
                witness = {
                    "product_subgroup": _gens(m),
                    "maximal": _gens(h),
                    "pieces": [_gens(s) for s in pieces],
                    "intersection_order": lhs.order(),
                    "piecewise_order": order_product,
                }
                return _report(
                    "factor", label, spec, t0, "fail", witness, restricted
                )
    witness = {"instances": count}
    return _report("factor", label, spec, t0, "pass", witness, restricted)


def check_centralizer_lemma(
    group, label=None, subnormal_members=None, lattice_cap=None, scan_cap=None
):
    """When every normal p-subgroup is trivial: a simple subnormal S not
    contained in a subnormal A centralizes A.

    Precondition failures are reported as skipped, not failed.
    """
    t0 = time.perf_counter()
    label = _label(group, label)
    for p in sorted(_primes_of(group.order())):
        rad = o_x(ClassSpec.pi_groups((p,)), group, scan_cap, lattice_cap)
        if rad.order() > 1:
            witness = {
                "reason": f"nontrivial normal {p}-subgroup of order {rad.order()}"
            }
            return _report("centralizer", label, None, t0, "skipped", witness)
    restricted = subnormal_members is not None
    if subnormal_members is None:
        lattice = cached_lattice(group, lattice_cap, scan_cap)
        sub_classes = [
            cls
            for cls in lattice.classes
            if is_subnormal(group, cls.representative).ok
        ]
        reps = [cls.representative for cls in sub_classes]
        simples = [
            member
            for cls in sub_classes
            if is_simple(cls.representative, scan_cap)
            for member in _class_members_sorted(cls)
        ]
    else:
        reps = list(subnormal_members)
        simples = [s for s in reps if s.order() > 1 and is_simple(s, scan_cap)]
    count = 0
    for a in reps:
        for s in simples:
            if s.is_subgroup_of(a):
                continue
            count += 1
            for x in s.generators:
                for y in a.generators:
                    if x * y != y * x:
                        witness = {
                            "simple_subnormal": _gens(s),
                            "subnormal": _gens(a),
                            "noncommuting_pair": [
                                format_cycles(x),
                                format_cycles(y),
                            ],
                        }
                        return _report(
                            "centralizer",
                            label,
                            None,
                            t0,
                            "fail",
                            witness,
                            restricted,
                        )
    witness = {"pairs": count}
    return _report("centralizer", label, None, t0, "pass", witness, restricted)


def check_socle_intersection(group, label=None, lattice_cap=None, scan_cap=None):
    """In an almost simple group, every maximal subgroup meets the socle
    nontrivially.  Errors when the group is not almost simple."""
    t0 = time.perf_counter()
    label = _label(group, label)
    s = socle(group, scan_cap)
    if not is_simple(s, scan_cap) or _is_prime(s.order()):
        raise ValueError("socle is not nonabelian simple; group is not almost simple")
    classes = maximal_subgroup_classes(group, lattice_cap, scan_cap)
    for cls in classes:
        m = cls.representative
        if intersection(s, m, scan_cap).order() == 1:
            witness = {
                "maximal_subgroup": _gens(m),
                "socle": _gens(s),
            }
            return _report("socle", label, None, t0, "fail", witness)
    witness = {
        "socle_order": s.order(),
        "maximal_classes": len(classes),
    }
    return _report("socle", label, None, t0, "pass", witness)


def check_wreath_counterexample(
    spec, base_group, top_group, label=None, lattice_cap=None, scan_cap=None
):
    """Exhibit an X-maximal subgroup of a wreath product whose image in the
    top quotient is not X-maximal there.

    This shows that images of X-maximal subgroups need not be X-maximal:
    the witness is certified maximal by one-element extensions, yet its
    image under the quotient by the base is a proper, non-maximal member
    of the class.  Candidates whose image stays maximal (for instance a
    Sylow subgroup covering the whole top group) are recorded and passed
    over.
    """
    t0 = time.perf_counter()
    if label is None:
        label = (
            f"wreath(base order {base_group.order()}, top order {top_group.order()})"
        )
    if top_group.order() == 1:
        witness = {"reason": "trivial top group; the quotient collapses"}
        return _report("wreath", label, spec, t0, "skipped", witness)
    classes = maximal_x_subgroups(spec, base_group, lattice_cap, scan_cap)
    if len(classes) < 2:
        raise ValueError(
            "need at least two conjugacy classes of maximal class members "
            "in the base group"
        )
    k = top_group.order()
    order = base_group.order() ** k * k
    cap = effective_scan_cap(scan_cap)
    if order > cap:
        raise CapExceeded("wreath product order", order, cap)
    g = wreath_product(base_group, top_group, scan_cap)
    base = wreath_base_subgroup(base_group, top_group, scan_cap)
    q = quotient(g, base, scan_cap)
    if has_no_nontrivial_x_subgroup(spec, q.image_group):
        raise ValueError(
            "the top quotient has no nontrivial class members; every image "
            "is maximal there"
        )

    candidates = []
    g_primes = _primes_of(g.order())
    sylow_primes = sorted(g_primes if spec.pi is None else g_primes & spec.pi)
    for p in sylow_primes:
        candidates.append((f"sylow-{p}", sylow_subgroup(g, p, scan_cap)))
    d = base_group.degree
    reps = [cls.representative for cls in classes]
    for combo in product(range(len(reps)), repeat=k):
        if len(set(combo)) < 2:
            continue
        gens = tuple(
            _shift(p, i * d, g.degree)
            for i, ci in enumerate(combo)
            for p in reps[ci].generators
        )
        name = "product(" + ",".join(f"order-{reps[ci].order()}" for ci in combo) + ")"
        candidates.append((name, PermGroup(g.degree, gens)))

    passed_over = []
    for name, h in candidates:
        if not spec.is_member(h):
            passed_over.append({"candidate": name, "reason": "not a class member"})
            continue
        image = q.image_subgroup(h)
        if certify_x_maximal(spec, q.image_group, image, scan_cap):
            passed_over.append(
                {"candidate": name, "reason": "image is still maximal in the top"}
            )
            continue
        if not certify_x_maximal(spec, g, h, scan_cap):
            passed_over.append(
                {"candidate": name, "reason": "not maximal in the wreath product"}
            )
            continue
        witness = {
            "wreath_order": order,
            "witness_subgroup": _gens(h),
            "witness_order": h.order(),
            "image_order": image.order(),
            "top_order": q.image_group.order(),
            "passed_over": passed_over,
        }
        return _report("wreath", label, spec, t0, "pass", witness)
    witness = {"tried": passed_over}
    return _report("wreath", label, spec, t0, "fail", witness)


# ---------------------------------------------------------------------------
# suites

SUITE_NAMES = (
    "wh-normal",
    "wh-subnormal",
    "projections",
    "subnormality",
    "chunikhin",
    "intersection",
    "factor",
    "centralizer",
    "socle",
    "wreath",
    "all",
)

_SUITE_MAX_ORDER = {
    "wh-subnormal": 400,
    "wh-normal": 720,
    "projections": 400,
    "subnormality": 200,
    "chunikhin": 400,
    "intersection": 400,
    "factor": 400,
    "centralizer": 400,
}


def _family_for(group, class_filter):
    if class_filter is not None:
        return (class_filter,)
    return standard_family(group)


def _default_groups(suite):
    max_order = _SUITE_MAX_ORDER[suite]
    return [
        (name, g) for name, g in default_catalog(max_order)
    ]


def _wreath_spot_pieces(scan_cap):
    base = alternating(5)
    top = cyclic(2)
    g = wreath_product(base, top, scan_cap)
    a = wreath_base_subgroup(base, top, scan_cap)
    return base, top, g, a


def _certified_wreath_maximals(spec, scan_cap):
    """Mixed per-copy products of the base's maximal class members,
    certified maximal in the wreath product by one-element extensions."""
    base, top, g, a = _wreath_spot_pieces(scan_cap)
    classes = maximal_x_subgroups(spec, base)
    reps = [cls.representative for cls in classes]
    d = base.degree
    out = []
    for combo in product(range(len(reps)), repeat=top.order()):
        if len(set(combo)) < 2:
            continue
        gens = tuple(
            _shift(p, i * d, g.degree)
            for i, ci in enumerate(combo)
            for p in reps[ci].generators
        )
        h = PermGroup(g.degree, gens)
        if certify_x_maximal(spec, g, h, scan_cap):
            out.append(h)
    return g, a, out


_WREATH_SPOT_SPEC = ClassSpec.pi_groups((2, 5))


def _suite_wh_subnormal(groups, class_filter, lattice_cap, scan_cap):
    out = []
    for name, g in groups:
        for spec in _family_for(g, class_filter):
            out.append(
                check_wh_subnormal(
                    spec, g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
                )
            )
    return out


def _suite_wh_normal(groups, class_filter, lattice_cap, scan_cap, spots=True):
    out = []
    for name, g in groups:
        for spec in _family_for(g, class_filter):
            out.append(
                check_wh_normal(
                    spec, g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
                )
            )
    if spots and (class_filter is None or class_filter == _WREATH_SPOT_SPEC):
        spec = _WREATH_SPOT_SPEC
        g, a, maximals = _certified_wreath_maximals(spec, scan_cap)
        out.append(
            check_wh_normal(
                spec,
                g,
                label="wreath(alt(5),cyclic(2))",
                maximals=maximals,
                scan_cap=scan_cap,
            )
        )
    return out


def _suite_projections(groups, class_filter, lattice_cap, scan_cap):
    out = []
    for name, g in groups:
        series = composition_series(g, scan_cap)
        for spec in _family_for(g, class_filter):
            out.append(
                check_projection_conjugacy(
                    spec,
                    g,
                    series,
                    label=name,
                    lattice_cap=lattice_cap,
                    scan_cap=scan_cap,
                )
            )
    return out


def _suite_subnormality(groups, class_filter, lattice_cap, scan_cap):
    # the class filter is deliberately ignored: the family route of the
    # three-way equivalence is only valid quantified over the full family,
    # and thinning it would manufacture spurious failures
    out = []
    for name, g in groups:
        out.append(
            check_subnormality_criterion(
                g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
            )
        )
    return out


def _suite_chunikhin(groups, class_filter, lattice_cap, scan_cap):
    out = []
    for name, g in groups:
        for spec in _family_for(g, class_filter):
            out.append(
                check_chunikhin(
                    spec, g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
                )
            )
    return out


def _suite_intersection(groups, class_filter, lattice_cap, scan_cap, spots=True):
    out = []
    for name, g in groups:
        for spec in _family_for(g, class_filter):
            out.append(
                check_nontrivial_intersection(
                    spec, g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
                )
            )
    spot_spec = ClassSpec.pi_groups((5,))
    if spots and (class_filter is None or class_filter == spot_spec):
        base, top, g, a = _wreath_spot_pieces(scan_cap)
        # maximal 5-subgroups are exactly the Sylow 5-subgroups, so the
        # maximal list is complete here even though the group is far above
        # the lattice cap
        sylows = all_sylow_subgroups(g, 5, scan_cap)
        copy0 = PermGroup(
            g.degree, tuple(_shift(p, 0, g.degree) for p in base.generators)
        )
        out.append(
            check_nontrivial_intersection(
                spot_spec,
                g,
                label="wreath(alt(5),cyclic(2))",
                maximals=list(sylows),
                subnormals=[copy0],
                scan_cap=scan_cap,
            )
        )
    return out


def _suite_factor(groups, class_filter, lattice_cap, scan_cap, spots=True):
    out = []
    for name, g in groups:
        for spec in _family_for(g, class_filter):
            out.append(
                check_factor_lemma(
                    spec, g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
                )
            )
    spot_spec = ClassSpec.solvable()
    if spots and (class_filter is None or class_filter == spot_spec):
        a5 = alternating(5)
        prod = direct_product(a5, a5)
        per_factor = list(submax_in_ambient(spot_spec, a5, a5, "normal"))
        combined = direct_product_submax(spot_spec, [per_factor, per_factor])
        maximals = []
        for w in combined:
            if certify_x_maximal(spot_spec, prod, w.result, scan_cap):
                maximals.append(w.result)
        mins = minimal_normal_subgroups(prod, scan_cap)
        subnormals = [PermGroup.trivial(prod.degree)] + list(mins) + [prod]
        out.append(
            check_factor_lemma(
                spot_spec,
                prod,
                label="direct(alt(5),alt(5))",
                maximals=maximals,
                subnormals=subnormals,
                scan_cap=scan_cap,
            )
        )
    return out


def _suite_centralizer(groups, class_filter, lattice_cap, scan_cap, spots=True):
    out = []
    for name, g in groups:
        out.append(
            check_centralizer_lemma(
                g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
            )
        )
    if spots:
        a5 = alternating(5)
        prod = direct_product(a5, a5)
        out.append(
            check_centralizer_lemma(
                prod,
                label="direct(alt(5),alt(5))",
                subnormal_members=restricted_subnormal_subgroups(prod, scan_cap),
                scan_cap=scan_cap,
            )
        )
        base, top, g, a = _wreath_spot_pieces(scan_cap)
        out.append(
            check_centralizer_lemma(
                g,
                label="wreath(alt(5),cyclic(2))",
                subnormal_members=restricted_subnormal_subgroups(g, scan_cap),
                scan_cap=scan_cap,
            )
        )
    return out


_SOCLE_INSTANCES = (
    ("alt(5)", alternating, (5,)),
    ("sym(5)", symmetric, (5,)),
    ("psl27", projective_special_linear_2_7, ()),
    ("pgl27", projective_general_linear_2_7, ()),
    ("psl29", projective_special_linear_2_9, ()),
    ("pgl29", projective_general_linear_2_9, ()),
    ("m10", mathieu_10, ()),
    ("psigmal29", projective_semilinear_2_9, ()),
    ("sym(6)", symmetric, (6,)),
    ("pgammal29", projective_gamma_linear_2_9, ()),
)


def _skipped_report(check_id, label, spec, reason):
    t0 = time.perf_counter()
    return _report(check_id, label, spec, t0, "skipped", {"reason": reason})


def _suite_socle(groups, class_filter, lattice_cap, scan_cap):
    out = []
    if groups is not None:
        # an explicit group filter may name groups the check does not apply
        # to; report those as skipped so `verify all <group>` stays usable
        for name, g in groups:
            try:
                out.append(
                    check_socle_intersection(
                        g, label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
                    )
                )
            except (ValueError, CapExceeded) as e:
                out.append(_skipped_report("socle", name, None, str(e)))
        return out
    for name, maker, args in _SOCLE_INSTANCES:
        out.append(
            check_socle_intersection(
                maker(*args), label=name, lattice_cap=lattice_cap, scan_cap=scan_cap
            )
        )
    return out


def _suite_wreath(groups, class_filter, lattice_cap, scan_cap):
    spec = class_filter if class_filter is not None else _WREATH_SPOT_SPEC
    if groups is not None:
        # filtered runs use each group as the base of a C2 wreath product;
        # bases the construction does not apply to are reported as skipped
        out = []
        for name, g in groups:
            label = f"wreath({name},cyclic(2))"
            try:
                out.append(
                    check_wreath_counterexample(
                        spec,
                        g,
                        cyclic(2),
                        label=label,
                        lattice_cap=lattice_cap,
                        scan_cap=scan_cap,
                    )
                )
            except (ValueError, CapExceeded) as e:
                out.append(_skipped_report("wreath", label, spec, str(e)))
        return out
    return [
        check_wreath_counterexample(
            spec,
            alternating(5),
            cyclic(2),
            label="wreath(alt(5),cyclic(2))",
            lattice_cap=lattice_cap,
            scan_cap=scan_cap,
        )
    ]


def run_suite(
    suite, groups=None, class_filter=None, lattice_cap=None, scan_cap=None
):
    """Run a named suite and return its reports in deterministic order.

    ``groups``: optional list of (label, PermGroup) pairs replacing the
    default catalog selection (order caps are then not applied).
    ``class_filter``: optional single ClassSpec replacing the standard
    family.
    """
    if suite not in SUITE_NAMES:
        raise ValueError(
            f"unknown suite {suite!r}; expected one of {', '.join(SUITE_NAMES)}"
        )
    if suite == "all":
        out = []
        for name in SUITE_NAMES[:-1]:
            out.extend(
                run_suite(
                    name,
                    groups=groups,
                    class_filter=class_filter,
                    lattice_cap=lattice_cap,
                    scan_cap=scan_cap,
                )
            )
        return out
    chosen = groups
    explicit = groups is not None
    if chosen is None and suite in _SUITE_MAX_ORDER:
        chosen = _default_groups(suite)
    if suite == "wh-subnormal":
        return _suite_wh_subnormal(chosen, class_filter, lattice_cap, scan_cap)
    if suite == "wh-normal":
        return _suite_wh_normal(
            chosen, class_filter, lattice_cap, scan_cap, spots=not explicit
        )
    if suite == "projections":
        return _suite_projections(chosen, class_filter, lattice_cap, scan_cap)
    if suite == "subnormality":
        return _suite_subnormality(chosen, class_filter, lattice_cap, scan_cap)
    if suite == "chunikhin":
        return _suite_chunikhin(chosen, class_filter, lattice_cap, scan_cap)
    if suite == "intersection":
        return _suite_intersection(
            chosen, class_filter, lattice_cap, scan_cap, spots=not explicit
        )
    if suite == "factor":
        return _suite_factor(
            chosen, class_filter, lattice_cap, scan_cap, spots=not explicit
        )
    if suite == "centralizer":
        return _suite_centralizer(
            chosen, class_filter, lattice_cap, scan_cap, spots=not explicit
        )
    if suite == "socle":
        return _suite_socle(groups, class_filter, lattice_cap, scan_cap)
    return _suite_wreath(groups, class_filter, lattice_cap, scan_cap)
