"""Brute-force reference implementations used only by the test suite.

Everything here works on explicit element lists and never touches the
stabilizer-chain machinery, so these functions provide an independent
route to the same answers.  They are exponentially slower and are only
ever applied to small groups.
"""

from __future__ import annotations

from glab.perm import Permutation


def naive_closure(degree, generators):
    """All products of the generators, by breadth-first closure."""
    ident = Permutation.identity(degree)
    gens = [g for g in generators if not g.is_identity()]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def naive_order(degree, generators):
    return len(naive_closure(degree, generators))


def elements_key(elements):
    return frozenset(p.images for p in elements)


def naive_normalizer(ambient_elements, subgroup_elements):
    """Elements of the ambient list that fix the subgroup set under conjugation."""
    sub = elements_key(subgroup_elements)
    out = []
    for x in ambient_elements:
        xi = x.inverse()
        if all((xi * p * x).images in sub for p in subgroup_elements):
            out.append(x)
    return out


def naive_conjugator(ambient_elements, left_elements, right_elements):
    """First element conjugating the left set onto the right set, else None."""
    if len(left_elements) != len(right_elements):
        return None
    right = elements_key(right_elements)
    for x in ambient_elements:
        xi = x.inverse()
        if all((xi * p * x).images in right for p in left_elements):
            return x
    return None


def naive_all_subgroups(degree, group_elements):
    """Every subgroup, as a set of element-key frozensets.

    Uses the fact that any subgroup is the join of its cyclic subgroups:
    seed with all cyclic subgroups, then close under pairwise join.
    """
    ident = Permutation.identity(degree)
    by_key = {}

    def register(elems):
        key = elements_key(elems)
        if key not in by_key:
            by_key[key] = sorted(elems)
        return key

    register([ident])
    for x in group_elements:
        if x.is_identity():
            continue
        cyc = [ident]
        p = x
        while not p.is_identity():
            cyc.append(p)
            p = p * x
        register(cyc)

    changed = True
    while changed:
        changed = False
        keys = sorted(by_key, key=sorted)
        for i, ka in enumerate(keys):
            for kb in keys[i + 1:]:
                if ka <= kb or kb <= ka:
                    continue
                gens = by_key[ka] + by_key[kb]
                join = naive_closure(degree, gens)
                key = elements_key(join)
                if key not in by_key:
                    by_key[key] = join
                    changed = True
    return by_key


def naive_commutator_subgroup(degree, elements):
    """Closure of every commutator of every pair of elements."""
    comms = []
    for a in elements:
        ai = a.inverse()
        for b in elements:
            comms.append(ai * b.inverse() * a * b)
    return naive_closure(degree, comms)


def naive_is_solvable(degree, elements):
    """Solvability by iterating the full commutator subgroup to the identity."""
    cur = sorted(elements)
    while len(cur) > 1:
        nxt = naive_commutator_subgroup(degree, cur)
        if len(nxt) == len(cur):
            return False
        cur = nxt
    return True


def naive_prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def naive_is_normal(sub_elems, ambient_elems):
    sub = elements_key(sub_elems)
    for x in ambient_elems:
        xi = x.inverse()
        for p in sub_elems:
            if (xi * p * x).images not in sub:
                return False
    return True


def naive_is_subnormal(degree, group_elements, sub_elements):
    """Subnormality by exhaustive chain search over the full subgroup poset."""
    lattice = naive_all_subgroups(degree, group_elements)
    target = elements_key(sub_elements)
    top = elements_key(group_elements)
    if target == top:
        return True
    # walk down: keys reachable from the top through normal-in steps
    reachable = {top}
    frontier = [top]
    while frontier:
        cur = frontier.pop()
        cur_elems = lattice[cur]
        for key, elems in lattice.items():
            if key in reachable or not key < cur:
                continue
            if naive_is_normal(elems, cur_elems):
                reachable.add(key)
                frontier.append(key)
    return target in reachable
