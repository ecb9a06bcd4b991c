"""Tests for the group-expression parser and its evaluation."""

import pytest

from glab.catalog import NAMED_GROUPS, klein_four
from glab.groupspec import GroupExpr, GroupSyntaxError, parse_group
from glab.perm import parse_cycles


class TestParsing:
    def test_symmetric(self):
        e = parse_group("sym(4)")
        assert e == GroupExpr("sym", (4,))
        g = e.build()
        assert (g.degree, g.order()) == (4, 24)

    def test_wreath(self):
        g = parse_group("wreath(alt(5), cyclic(2))").build()
        assert (g.degree, g.order()) == (10, 7200)

    def test_generators(self):
        e = parse_group("gens[4; (1 2)(3 4), (1 3)(2 4)]")
        degree, perms = e.args
        assert degree == 4
        assert perms == (
            parse_cycles("(1 2)(3 4)", 4),
            parse_cycles("(1 3)(2 4)", 4),
        )
        assert e.build().key() == klein_four().key()

    def test_identity_generator(self):
        g = parse_group("gens[3; ()]").build()
        assert (g.degree, g.order()) == (3, 1)

    def test_every_named_entry_parses_and_builds(self):
        for name, maker in NAMED_GROUPS.items():
            e = parse_group(name)
            assert e == GroupExpr(name)
            assert e.build().order() == maker().order()

    def test_whitespace_is_free(self):
        e = parse_group("  direct( sym(3) ,  cyclic(2) )  ")
        assert str(e) == "direct(sym(3), cyclic(2))"
        g = e.build()
        assert (g.degree, g.order()) == (5, 12)

    def test_nested_products(self):
        e = parse_group("direct(direct(cyclic(2), cyclic(2)), sym(3))")
        assert e.build().order() == 24

    def test_dihedral_takes_the_order(self):
        assert parse_group("dihedral(8)").build().order() == 8
        assert parse_group("dihedral(12)").build().order() == 12


class TestRoundTrip:
    CASES = [
        "sym(6)",
        "alt(5)",
        "cyclic(12)",
        "dihedral(10)",
        "v4",
        "psl27",
        "aut_a6_pair",
        "direct(sym(4), cyclic(2))",
        "wreath(alt(5), cyclic(2))",
        "wreath(direct(cyclic(2), cyclic(3)), sym(3))",
        "gens[4; (1 2)(3 4), (1 3)(2 4)]",
        "gens[5; (1 2 3 4 5), (2 5)(3 4)]",
        "gens[3; ()]",
    ]

    @pytest.mark.parametrize("text", CASES)
    def test_print_then_parse_is_identity(self, text):
        e = parse_group(text)
        assert parse_group(str(e)) == e

    def test_trees_are_hashable(self):
        seen = {parse_group(t) for t in self.CASES}
        assert len(seen) == len(self.CASES)


class TestErrors:
    @pytest.mark.parametrize(
        "text,position,fragment",
        [
            ("", 0, "expected a group name"),
            ("sym", 3, "expected '('"),
            ("sym(", 4, "expected an integer argument"),
            ("sym(0)", 4, "at least 1"),
            ("sym(99999)", 4, "exceeds the limit"),
            ("sym(4", 5, "expected ')'"),
            ("bogus(3)", 0, "unknown group 'bogus'"),
            ("direct(sym(4))", 13, "expected ','"),
            ("sym(4) junk", 7, "trailing input"),
            ("gens[4]", 6, "expected ';'"),
            ("gens[4; ]", 8, "empty generator"),
            ("gens[4; (1 5)]", 8, "exceeds degree"),
            ("gens[4; (1 2]", 13, "expected ']'"),
            ("gens[0; ()]", 5, "at least 1"),
        ],
    )
    def test_position_annotated_errors(self, text, position, fragment):
        with pytest.raises(GroupSyntaxError) as exc:
            parse_group(text)
        assert exc.value.position == position
        assert fragment in str(exc.value)

    def test_unknown_name_lists_known_ones(self):
        with pytest.raises(GroupSyntaxError, match="wreath"):
            parse_group("quasithin")

    def test_build_rejects_odd_dihedral_order(self):
        e = parse_group("dihedral(7)")
        with pytest.raises(ValueError, match="even order"):
            e.build()

    def test_syntax_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            parse_group("sym[4]")
