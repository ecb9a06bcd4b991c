"""Tests for normal structure: closures, subnormality, series, quotients."""

import itertools

import pytest

from glab.config import ContainmentError
from glab.perm import PermGroup, Permutation, generated, intersection, parse_cycles
from glab.structure import (
    QuotientMap,
    SubnormalSeries,
    composition_series,
    conjugacy_class_reps,
    derived_subgroup,
    is_simple,
    is_solvable,
    is_subnormal,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    project,
    quotient,
)

from _oracles import (
    elements_key,
    naive_closure,
    naive_is_subnormal,
)


def perm(degree, text):
    return parse_cycles(text, degree)


def grp(degree, *texts):
    return generated(degree, [perm(degree, t) for t in texts])


def sym(n):
    if n <= 1:
        return PermGroup.trivial(max(n, 1))
    gens = [perm(n, "(1 2)")]
    if n > 2:
        gens.append(Permutation(tuple(range(1, n)) + (0,)))
    return generated(n, gens)


def alt(n):
    threes = []
    for i in range(n - 2):
        threes.append(Permutation._make(_three_cycle(n, 0, i + 1, i + 2)))
    return generated(n, threes)


def _three_cycle(n, a, b, c):
    images = list(range(n))
    images[a], images[b], images[c] = images[b], images[c], images[a]
    return tuple(images)


S4 = sym(4)
A4 = alt(4)
V4 = grp(4, "(1 2)(3 4)", "(1 3)(2 4)")
A5 = alt(5)
S5 = sym(5)


class TestNormalClosure:
    def test_closure_of_transposition_in_s4_is_s4(self):
        n = normal_closure(S4, grp(4, "(1 2)"))
        assert n.order() == 24

    def test_closure_of_double_transposition_in_s4_is_v4(self):
        n = normal_closure(S4, grp(4, "(1 2)(3 4)"))
        assert n.order() == 4
        assert n.key() == V4.key()

    def test_closure_of_three_cycle_in_s4_is_a4(self):
        n = normal_closure(S4, grp(4, "(1 2 3)"))
        assert n.key() == A4.key()

    def test_closure_requires_containment(self):
        with pytest.raises(ContainmentError):
            normal_closure(A4, grp(4, "(1 2)"))

    def test_closure_matches_naive_conjugate_closure(self):
        ambient = grp(5, "(1 2 3 4 5)", "(2 3 5 4)")  # F20
        sub = grp(5, "(2 3 5 4)")
        n = normal_closure(ambient, sub)
        # oracle: close the subgroup's elements under conjugation, then generate
        amb_elems = naive_closure(5, ambient.generators)
        sub_elems = naive_closure(5, sub.generators)
        conj = {s.conjugated_by(x) for s in sub_elems for x in amb_elems}
        oracle = naive_closure(5, sorted(conj))
        assert n.key() == elements_key(oracle)


class TestSubnormality:
    def test_v4_is_subnormal_in_s4_at_depth_one(self):
        res = is_subnormal(S4, V4)
        assert res.ok
        assert res.depth == 1

    def test_cyclic_double_transposition_subnormal_depth_two(self):
        a = grp(4, "(1 2)(3 4)")
        res = is_subnormal(S4, a)
        assert res.ok
        assert res.depth == 2
        assert [t.order() for t in res.chain] == [24, 4, 2]

    def test_transposition_group_not_subnormal_in_s4(self):
        res = is_subnormal(S4, grp(4, "(1 2)"))
        assert not res.ok
        assert not bool(res)

    def test_whole_group_subnormal_depth_zero(self):
        res = is_subnormal(S4, S4)
        assert res.ok
        assert res.depth == 0
        assert res.chain == (S4,)

    def test_requires_containment(self):
        with pytest.raises(ContainmentError):
            is_subnormal(A4, grp(4, "(1 2)"))

    @pytest.mark.parametrize(
        "ambient",
        [
            grp(4, "(1 2)", "(1 2 3 4)"),
            grp(4, "(1 2 3)", "(1 2)(3 4)"),
            grp(6, "(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)"),
            grp(8, "(1 2 3 4)(5 6 7 8)", "(1 5)(2 8)(3 7)(4 6)"),  # Q8-like
        ],
    )
    def test_agrees_with_exhaustive_descent_oracle(self, ambient):
        amb_elems = naive_closure(ambient.degree, ambient.generators)
        # check every cyclic subgroup both ways
        seen = set()
        for x in amb_elems:
            sub_elems = naive_closure(ambient.degree, [x])
            key = elements_key(sub_elems)
            if key in seen:
                continue
            seen.add(key)
            sub = generated(ambient.degree, [x])
            got = is_subnormal(ambient, sub).ok
            want = naive_is_subnormal(ambient.degree, amb_elems, sub_elems)
            assert got == want, f"disagreement on subgroup of order {sub.order()}"


class TestDerivedAndSolvable:
    def test_derived_of_s4_is_a4(self):
        assert derived_subgroup(S4).key() == A4.key()

    def test_derived_of_a4_is_v4(self):
        assert derived_subgroup(A4).key() == V4.key()

    def test_derived_of_a5_is_a5(self):
        assert derived_subgroup(A5).order() == 60

    def test_solvability_small_groups(self):
        assert is_solvable(S4)
        assert is_solvable(V4)
        assert is_solvable(PermGroup.trivial(3))
        assert not is_solvable(A5)
        assert not is_solvable(S5)


class TestConjugacyClasses:
    def test_s4_has_five_classes(self):
        reps = conjugacy_class_reps(S4)
        assert len(reps) == 5
        assert reps[0].is_identity()

    def test_class_sizes_sum_to_order(self):
        for g in [S4, A4, A5, grp(6, "(1 2 3 4 5 6)", "(2 6)(3 5)")]:
            reps = conjugacy_class_reps(g)
            total = 0
            elems = set(g.elements())
            for r in reps:
                cls = {r}
                frontier = [r]
                while frontier:
                    cur = frontier.pop()
                    for gen in g.generators:
                        y = cur.conjugated_by(gen)
                        if y not in cls:
                            cls.add(y)
                            frontier.append(y)
                total += len(cls)
                assert cls <= elems
            assert total == g.order()

    def test_a5_has_five_classes(self):
        assert len(conjugacy_class_reps(A5)) == 5


class TestNormalSubgroups:
    def test_s4_normal_subgroups(self):
        ns = normal_subgroups(S4)
        assert [n.order() for n in ns] == [1, 4, 12, 24]

    def test_a5_is_simple(self):
        assert is_simple(A5)
        assert [n.order() for n in normal_subgroups(A5)] == [1, 60]

    def test_trivial_and_cyclic_not_simple_edge_cases(self):
        assert not is_simple(PermGroup.trivial(2))
        assert is_simple(grp(3, "(1 2 3)"))  # order 3, prime
        assert not is_simple(grp(4, "(1 2 3 4)"))  # order 4 cyclic

    def test_minimal_normals_of_s4(self):
        mins = minimal_normal_subgroups(S4)
        assert len(mins) == 1
        assert mins[0].key() == V4.key()

    def test_minimal_normals_of_product_of_simple(self):
        # A5 x A5 acting on 10 points: the two factors are the minimal normals
        left = [
            "(1 2 3)", "(1 2 3 4 5)",
        ]
        right = ["(6 7 8)", "(6 7 8 9 10)"]
        g = grp(10, *(left + right))
        assert g.order() == 3600
        mins = minimal_normal_subgroups(g)
        assert [m.order() for m in mins] == [60, 60]
        keys = {m.key() for m in mins}
        assert grp(10, *left).key() in keys
        assert grp(10, *right).key() in keys

    def test_minimal_normals_against_exhaustive_oracle(self):
        for g in [S4, A4, grp(6, "(1 2 3 4 5 6)"), grp(6, "(1 2 3)", "(1 2)", "(4 5 6)")]:
            amb = naive_closure(g.degree, g.generators)
            # oracle: all normal subgroups by brute force over subsets generated
            # from single elements and joins
            from _oracles import naive_all_subgroups, naive_is_normal

            allsubs = naive_all_subgroups(g.degree, amb)
            normal_keys = {
                k for k, elems in allsubs.items() if naive_is_normal(elems, amb)
            }
            nontrivial = {k for k in normal_keys if len(k) > 1}
            minimal_keys = {
                k for k in nontrivial
                if not any(o < k for o in nontrivial)
            }
            got = {m.key() for m in minimal_normal_subgroups(g)}
            assert got == minimal_keys


class TestQuotient:
    def test_s4_mod_v4_has_order_six(self):
        q = quotient(S4, V4)
        assert q.image_group.order() == 6
        assert q.image_group.degree == 6  # regular action on 6 cosets
        assert not is_simple(q.image_group) or q.image_group.order() <= 1

    def test_s4_mod_a4_is_order_two(self):
        q = quotient(S4, A4)
        assert q.image_group.order() == 2

    def test_trivial_kernel_keeps_natural_action(self):
        q = quotient(S4, PermGroup.trivial(4))
        assert q.image_group is S4
        x = perm(4, "(1 2 3)")
        assert q.image_of(x) == x
        assert q.preimage_of(x) == x

    def test_homomorphism_property(self):
        q = quotient(S4, V4)
        elems = S4.elements()
        for a in elems[:8]:
            for b in elems[:8]:
                assert q.image_of(a * b) == q.image_of(a) * q.image_of(b)

    def test_kernel_maps_to_identity_and_fibres_are_cosets(self):
        q = quotient(S4, V4)
        for k in V4.elements():
            assert q.image_of(k).is_identity()
        # two elements map together iff they lie in the same coset
        for a in S4.elements()[:6]:
            for b in S4.elements()[:6]:
                same = q.image_of(a) == q.image_of(b)
                assert same == V4.contains(a * b.inverse())

    def test_preimage_of_image_returns_canonical_rep(self):
        q = quotient(S4, V4)
        for a in S4.elements():
            r = q.preimage_of(q.image_of(a))
            assert q.image_of(r) == q.image_of(a)
            # canonical rep is the minimum of its coset
            coset = sorted(k * a for k in V4.elements())
            assert r == coset[0]

    def test_image_subgroup_of_d8(self):
        d8 = grp(4, "(1 2 3 4)", "(1 3)")
        q = quotient(S4, V4)
        img = q.image_subgroup(d8)
        assert img.order() == 2  # D8/V4 inside S4/V4 = S3

    def test_preimage_subgroup_round_trip(self):
        q = quotient(S4, V4)
        img = q.image_subgroup(A4)
        back = q.preimage_subgroup(img)
        assert back.key() == A4.key()

    def test_rejects_non_normal_kernel(self):
        with pytest.raises(ValueError):
            quotient(S4, grp(4, "(1 2)"))

    def test_rejects_outside_kernel(self):
        with pytest.raises(ContainmentError):
            QuotientMap(A4, grp(4, "(1 2)"))


class TestCompositionSeries:
    def test_s4_factor_orders(self):
        s = composition_series(S4)
        assert s.factor_orders() == (2, 3, 2, 2)
        assert [t.order() for t in s.terms] == [24, 12, 4, 2, 1]

    def test_a5_factor_orders(self):
        s = composition_series(A5)
        assert s.factor_orders() == (60,)

    def test_s5_factor_orders(self):
        s = composition_series(S5)
        assert s.factor_orders() == (2, 60)

    def test_strategies_agree_on_factor_multiset(self):
        for g in [S4, A4, grp(6, "(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)")]:
            a = composition_series(g, prefer="max")
            b = composition_series(g, prefer="min")
            assert sorted(a.factor_orders()) == sorted(b.factor_orders())

    def test_every_step_is_maximal_normal(self):
        s = composition_series(S4)
        for upper, lower in zip(s.terms, s.terms[1:]):
            assert lower.is_normal_in(upper)
            # factor group is simple
            q = quotient(upper, lower)
            assert is_simple(q.image_group)

    def test_series_validation_rejects_non_normal_step(self):
        with pytest.raises(ValueError):
            SubnormalSeries((S4, grp(4, "(1 2)")))


class TestProjections:
    def test_d8_projections_along_s4_series(self):
        # S4 > A4 > V4 > 1 is a composition-like series; D8 meets it in
        # D8 > C4-or-V4 ... with projection orders 2, 1, 4 after quotients:
        # (D8 n S4)A4/A4 = 2, (D8 n A4)V4/V4 = 1, (D8 n V4)/1 = 4
        series = SubnormalSeries((S4, A4, V4, PermGroup.trivial(4)))
        d8 = grp(4, "(1 2 3 4)", "(1 3)")
        orders = [project(series, d8, i).order() for i in (1, 2, 3)]
        assert orders == [2, 1, 4]

    def test_projection_of_full_group_is_full_factor(self):
        series = SubnormalSeries((S4, A4, V4, PermGroup.trivial(4)))
        for i in (1, 2, 3):
            assert project(series, S4, i).order() == series.factor_orders()[i - 1]

    def test_projection_of_trivial_group_is_trivial(self):
        series = SubnormalSeries((S4, A4, V4, PermGroup.trivial(4)))
        for i in (1, 2, 3):
            assert project(series, PermGroup.trivial(4), i).order() == 1

    def test_projection_order_divides_both(self):
        series = composition_series(S4)
        for texts in [("(1 2)",), ("(1 2 3)",), ("(1 2 3 4)",), ("(1 2)", "(3 4)")]:
            h = grp(4, *texts)
            for i in range(1, series.length + 1):
                p = project(series, h, i)
                assert series.factor_orders()[i - 1] % p.order() == 0

    def test_projections_are_comparable_across_subgroups(self):
        # the canonical labelling means equal projections compare equal
        series = SubnormalSeries((S4, A4, V4, PermGroup.trivial(4)))
        a = grp(4, "(1 2)(3 4)")
        b = grp(4, "(1 3)(2 4)")
        pa = project(series, a, 3)
        pb = project(series, b, 3)
        assert pa.key() != pb.key()  # different subgroups of V4
        pa2 = project(series, a, 2)
        pb2 = project(series, b, 2)
        assert pa2.key() == pb2.key()  # both trivial in the middle factor

    def test_projection_index_bounds(self):
        series = composition_series(S4)
        with pytest.raises(IndexError):
            project(series, V4, 0)
        with pytest.raises(IndexError):
            project(series, V4, series.length + 1)

    def test_projection_requires_containment(self):
        series = composition_series(A4)
        with pytest.raises(ContainmentError):
            project(series, grp(4, "(1 2)"), 1)
