"""Tests for X-maximal subgroups and ambient-witnessed submaximality.

Expected class counts and orders below were derived by hand from the
subgroup structure of the small groups involved and are cross-checked
against the brute-force subgroup oracle where feasible.
"""

import pytest

from glab.catalog import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    symmetric,
)
from glab.config import CapExceeded, ContainmentError
from glab.lattice import sylow_subgroup
from glab.perm import generated, intersection, parse_cycles
from glab.xclass import ClassSpec
from glab.xmax import (
    AmbientWitness,
    all_maximal_x_subgroups,
    certify_x_maximal,
    direct_product_submax,
    maximal_subgroup_classes,
    maximal_x_subgroups,
    result_keys,
    socle,
    strong_submax_almost_simple,
    submax_in_ambient,
)

from _oracles import (
    naive_all_subgroups,
    naive_is_solvable,
    naive_prime_factors,
)

PI2 = ClassSpec.pi_groups((2,))
PI23 = ClassSpec.pi_groups((2, 3))
PI25 = ClassSpec.pi_groups((2, 5))
SOLV = ClassSpec.solvable()
ALL = ClassSpec.all_groups()

S3 = symmetric(3)
S4 = symmetric(4)
S5 = symmetric(5)
A4 = alternating(4)
A5 = alternating(5)


def class_profile(classes):
    """(order, conjugate count) per class, in lattice order."""
    return [(cls.order, cls.size) for cls in classes]


class TestMaximalXSubgroups:
    def test_solvable_maximals_of_alt5(self):
        classes = maximal_x_subgroups(SOLV, A5)
        assert class_profile(classes) == [(6, 10), (10, 6), (12, 5)]

    def test_pi25_maximals_of_alt5(self):
        classes = maximal_x_subgroups(PI25, A5)
        assert class_profile(classes) == [(4, 5), (10, 6)]

    def test_pi25_maximals_of_sym5(self):
        classes = maximal_x_subgroups(PI25, S5)
        assert class_profile(classes) == [(8, 15), (20, 6)]

    @pytest.mark.parametrize(
        "group,two_part",
        [(S4, 8), (A4, 4), (A5, 4), (S5, 8)],
    )
    def test_pi_p_maximals_are_the_sylow_subgroups(self, group, two_part):
        classes = maximal_x_subgroups(PI2, group)
        assert len(classes) == 1
        assert classes[0].order == two_part
        syl = sylow_subgroup(group, 2)
        assert any(
            syl.key() == key for key in classes[0].conjugates
        )

    def test_whole_group_when_member(self):
        classes = maximal_x_subgroups(ALL, S4)
        assert class_profile(classes) == [(24, 1)]
        solv = maximal_x_subgroups(SOLV, S4)
        assert class_profile(solv) == [(24, 1)]

    def test_trivial_when_no_prime_applies(self):
        classes = maximal_x_subgroups(ClassSpec.pi_groups((7,)), S4)
        assert class_profile(classes) == [(1, 1)]

    def test_lattice_cap_propagates(self):
        with pytest.raises(CapExceeded):
            maximal_x_subgroups(PI2, S5, lattice_cap=100)


class TestAgainstExhaustiveOracle:
    GROUPS = [symmetric(4), alternating(4), dihedral(12), cyclic(12), alternating(5)]
    MEMBERSHIP = [
        (PI2, lambda elems: naive_prime_factors(len(elems)) <= {2}),
        (PI23, lambda elems: naive_prime_factors(len(elems)) <= {2, 3}),
        (PI25, lambda elems: naive_prime_factors(len(elems)) <= {2, 5}),
        (SOLV, None),
        (ALL, lambda elems: True),
    ]

    @pytest.mark.parametrize("group", GROUPS)
    def test_maximal_members_match_oracle(self, group):
        subs = naive_all_subgroups(group.degree, list(group.elements()))
        for spec, member in self.MEMBERSHIP:
            if member is None:
                member = lambda elems: naive_is_solvable(group.degree, elems)
            member_keys = [k for k in subs if member(subs[k])]
            expected = {
                k
                for k in member_keys
                if not any(k < other for other in member_keys)
            }
            got = {h.key() for h in all_maximal_x_subgroups(spec, group)}
            assert got == expected, f"{spec} on order {group.order()}"


class TestCertification:
    def test_sylow_two_of_sym4_certifies(self):
        assert certify_x_maximal(PI2, S4, sylow_subgroup(S4, 2))

    def test_proper_two_subgroup_fails(self):
        c2 = generated(4, [parse_cycles("(1 2)", 4)])
        assert not certify_x_maximal(PI2, S4, c2)

    def test_whole_group_always_certifies(self):
        assert certify_x_maximal(ALL, S4, S4)
        assert certify_x_maximal(SOLV, S4, S4)

    @pytest.mark.parametrize("group", [S4, A5, dihedral(16)])
    @pytest.mark.parametrize("spec", [PI2, PI25, SOLV])
    def test_agrees_with_lattice_route(self, group, spec):
        maximal_keys = set()
        for cls in maximal_x_subgroups(spec, group):
            maximal_keys.update(cls.conjugates)
        for h in _all_subgroups_of(group):
            if not spec.is_member(h):
                continue
            assert certify_x_maximal(spec, group, h) == (h.key() in maximal_keys)

    def test_rejects_non_member_candidate(self):
        with pytest.raises(ValueError):
            certify_x_maximal(PI2, S4, generated(4, [parse_cycles("(1 2 3)", 4)]))

    def test_rejects_foreign_candidate(self):
        with pytest.raises(ContainmentError):
            certify_x_maximal(PI2, A4, generated(4, [parse_cycles("(1 2)", 4)]))

    def test_scan_cap_guards_coset_count(self):
        with pytest.raises(CapExceeded):
            certify_x_maximal(
                PI2, S5, generated(5, [parse_cycles("(1 2)", 5)]), scan_cap=50
            )


def _all_subgroups_of(group):
    from glab.xmax import cached_lattice

    out = []
    for cls in cached_lattice(group).classes:
        for sub, _ in cls.members():
            out.append(sub)
    return out


class TestSubmaxInAmbient:
    def test_identity_ambient_recovers_maximals(self):
        witnesses = submax_in_ambient(PI25, A5, A5, "normal")
        assert result_keys(witnesses) == {
            h.key() for h in all_maximal_x_subgroups(PI25, A5)
        }

    def test_alt5_inside_sym5(self):
        witnesses = submax_in_ambient(PI25, S5, A5, "normal")
        orders = sorted(w.result.order() for w in witnesses)
        assert orders == [4] * 5 + [10] * 6
        for w in witnesses:
            assert w.ambient is S5
            assert w.mode == "normal"
            assert w.witness_max.order() in (8, 20)
            assert w.result.is_subgroup_of(A5)
            assert w.result.key() == intersection(w.witness_max, A5).key()

    def test_alt5_results_extend_its_own_maximals(self):
        own = {h.key() for h in all_maximal_x_subgroups(PI25, A5)}
        via_sym5 = result_keys(submax_in_ambient(PI25, S5, A5, "normal"))
        assert own == via_sym5

    def test_subnormal_mode_accepts_normal_embeddings(self):
        normal = result_keys(submax_in_ambient(PI25, S5, A5, "normal"))
        subnormal = result_keys(submax_in_ambient(PI25, S5, A5, "subnormal"))
        assert normal == subnormal

    def test_subnormal_mode_depth_two(self):
        prod = direct_product(S4, cyclic(2))
        v4 = generated(
            6, [parse_cycles("(1 2)(3 4)", 6), parse_cycles("(1 3)(2 4)", 6)]
        )
        witnesses = submax_in_ambient(PI23, prod, v4, "subnormal")
        for w in witnesses:
            assert w.result.is_subgroup_of(v4)

    def test_rejects_non_normal_embedding(self):
        s3 = generated(4, [parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)", 4)])
        with pytest.raises(ValueError):
            submax_in_ambient(PI2, S4, s3, "normal")

    def test_rejects_non_subnormal_embedding(self):
        s3 = generated(4, [parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)", 4)])
        with pytest.raises(ValueError):
            submax_in_ambient(PI2, S4, s3, "subnormal")

    def test_rejects_foreign_embedding(self):
        with pytest.raises(ContainmentError):
            submax_in_ambient(PI2, A4, S4, "normal")

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            submax_in_ambient(PI2, S4, A4, "central")


class TestSocle:
    def test_socle_of_sym4_is_the_klein_four(self):
        s = socle(S4)
        assert s.order() == 4
        assert s.is_normal_in(S4)

    def test_socle_of_sym5_is_alt5(self):
        assert socle(S5).key() == A5.key()

    def test_errors_when_not_unique(self):
        prod = direct_product(A5, A5)
        with pytest.raises(ValueError):
            socle(prod)


class TestStrongSubmaxAlmostSimple:
    def test_alt5_in_sym5_pinned_set(self):
        witnesses = strong_submax_almost_simple(PI25, A5, S5)
        orders = sorted(w.result.order() for w in witnesses)
        assert orders == [4] * 5 + [10] * 6
        for w in witnesses:
            assert w.result.is_subgroup_of(A5)
            assert w.embedded.key() == A5.key()
            assert w.mode == "normal"
            assert certify_x_maximal(PI25, w.ambient, w.witness_max)

    def test_contains_the_plain_maximals(self):
        witnesses = strong_submax_almost_simple(PI25, A5, S5)
        own = {h.key() for h in all_maximal_x_subgroups(PI25, A5)}
        assert own <= result_keys(witnesses)

    def test_degenerate_ambient_is_the_group_itself(self):
        witnesses = strong_submax_almost_simple(PI25, A5, A5)
        assert result_keys(witnesses) == {
            h.key() for h in all_maximal_x_subgroups(PI25, A5)
        }

    def test_rejects_class_containing_the_socle(self):
        with pytest.raises(ValueError):
            strong_submax_almost_simple(ClassSpec.pi_groups((2, 3, 5)), A5, S5)

    def test_rejects_abelian_socle(self):
        with pytest.raises(ValueError):
            strong_submax_almost_simple(PI2, S4, S4)

    def test_rejects_group_outside_aut(self):
        with pytest.raises(ContainmentError):
            strong_submax_almost_simple(PI25, S5, A5)


class TestDirectProductSubmax:
    def test_sylow_squares_in_sym3_square(self):
        part = list(submax_in_ambient(PI2, S3, S3, "normal"))
        assert sorted(w.result.order() for w in part) == [2, 2, 2]
        combined = direct_product_submax(PI2, [part, part])
        assert len(combined) == 9
        prod = direct_product(S3, S3)
        expected = {h.key() for h in all_maximal_x_subgroups(PI2, prod)}
        assert result_keys(combined) == expected
        for w in combined:
            assert w.ambient.key() == prod.key()
            assert w.result.order() == 4
            assert certify_x_maximal(PI2, w.ambient, w.witness_max)

    def test_affine_pair_in_sym5_square(self):
        f20_witnesses = [
            w
            for w in submax_in_ambient(SOLV, S5, S5, "normal")
            if w.result.order() == 20
        ]
        assert len(f20_witnesses) == 6
        combined = direct_product_submax(SOLV, [f20_witnesses[:1], f20_witnesses[:1]])
        (w,) = combined
        assert w.result.order() == 400
        assert w.witness_max.key() == w.result.key()
        assert w.ambient.order() == 14400
        assert certify_x_maximal(SOLV, w.ambient, w.witness_max)

    def test_mode_combination(self):
        part = list(submax_in_ambient(PI2, S3, S3, "normal"))
        combined = direct_product_submax(PI2, [part[:1], part[:1]])
        assert combined[0].mode == "normal"

    def test_single_factor_round_trip(self):
        part = list(submax_in_ambient(PI2, S4, S4, "normal"))
        combined = direct_product_submax(PI2, [part])
        assert result_keys(combined) == result_keys(part)

    def test_rejects_empty_input(self):
        with pytest.raises(ValueError):
            direct_product_submax(PI2, [])
        with pytest.raises(ValueError):
            direct_product_submax(PI2, [[]])

    def test_rejects_mixed_embedded_groups(self):
        a = submax_in_ambient(PI2, S3, S3, "normal")[0]
        b = submax_in_ambient(PI2, S4, S4, "normal")[0]
        with pytest.raises(ValueError):
            direct_product_submax(PI2, [[a, b]])


class TestMaximalSubgroupClasses:
    def test_sym4(self):
        assert class_profile(maximal_subgroup_classes(S4)) == [
            (6, 4),
            (8, 3),
            (12, 1),
        ]

    def test_alt5(self):
        assert class_profile(maximal_subgroup_classes(A5)) == [
            (6, 10),
            (10, 6),
            (12, 5),
        ]


class TestAmbientWitness:
    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            AmbientWitness(S4, A4, "sideways", A4, A4)
