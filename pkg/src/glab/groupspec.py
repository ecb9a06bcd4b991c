"""Textual expressions denoting permutation groups.

Grammar (whitespace is free between tokens)::

    expr  :=  NAME                          named catalog entry
           |  sym(N) | alt(N)               symmetric / alternating, degree N
           |  cyclic(N)                     cyclic of order N
           |  dihedral(N)                   dihedral of (even) order N >= 6
           |  direct(expr, expr)            outer direct product
           |  wreath(expr, expr)            regular wreath product base wr top
           |  gens[N; perm, perm, ...]      subgroup of Sym(N) generated by
                                            the listed permutations
    perm  :=  1-based cycle notation, e.g. (1 2)(3 4); the identity is ()

Parsing produces an expression tree; :meth:`GroupExpr.build` evaluates it
to a :class:`~glab.perm.PermGroup`.  Printing a tree and re-parsing the
text yields an equal tree, so expressions are usable as stable labels.
Syntax errors carry the 0-based offset where parsing stopped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import (
    NAMED_GROUPS,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    symmetric,
    wreath_product,
)
from .perm import format_cycles, generated, parse_cycles

# keeps accidental monsters like sym(10**9) from allocating their point set
_MAX_DEGREE = 10_000

_INT_HEADS = {
    "sym": symmetric,
    "alt": alternating,
    "cyclic": cyclic,
    "dihedral": dihedral,
}
_PAIR_HEADS = ("direct", "wreath")


class GroupSyntaxError(ValueError):
    """A group expression failed to parse; ``position`` is the 0-based
    offset in the input where the problem was detected."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True)
class GroupExpr:
    """One node of a group expression tree.

    ``head`` is a constructor name or a named catalog entry; ``args`` holds
    an int for the int-argument constructors, two subtrees for the product
    constructors, and ``(degree, permutations)`` for ``gens``.
    """

    head: str
    args: tuple = field(default=())

    def __str__(self):
        if self.head in _INT_HEADS:
            return f"{self.head}({self.args[0]})"
        if self.head in _PAIR_HEADS:
            return f"{self.head}({self.args[0]}, {self.args[1]})"
        if self.head == "gens":
            degree, perms = self.args
            listed = ", ".join(format_cycles(p) for p in perms)
            return f"gens[{degree}; {listed}]"
        return self.head

    def build(self, scan_cap=None):
        """Evaluate to a PermGroup.

        Construction-level failures (odd dihedral order, wreath products
        whose top group exceeds the scan cap) surface as the underlying
        ValueError or CapExceeded.
        """
        if self.head in _INT_HEADS:
            return _INT_HEADS[self.head](self.args[0])
        if self.head == "direct":
            return direct_product(
                self.args[0].build(scan_cap), self.args[1].build(scan_cap)
            )
        if self.head == "wreath":
            return wreath_product(
                self.args[0].build(scan_cap), self.args[1].build(scan_cap), scan_cap
            )
        if self.head == "gens":
            degree, perms = self.args
            return generated(degree, list(perms))
        return NAMED_GROUPS[self.head]()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, position=None):
        raise GroupSyntaxError(
            message, self.pos if position is None else position
        )

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        self.skip_ws()
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {got}")
        self.pos += 1

    def parse_name(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            got = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected a group name, found {got}")
        return self.text[start:self.pos], start

    def parse_int(self, what):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.error(f"{what} must be at least 1", start)
        if value > _MAX_DEGREE:
            self.error(f"{what} {value} exceeds the limit {_MAX_DEGREE}", start)
        return value

    def parse_expr(self):
        name, start = self.parse_name()
        if name == "gens":
            return self.parse_gens()
        if name in _INT_HEADS:
            self.expect("(")
            n = self.parse_int("an integer argument")
            self.expect(")")
            return GroupExpr(name, (n,))
        if name in _PAIR_HEADS:
            self.expect("(")
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect(")")
            return GroupExpr(name, (left, right))
        if name in NAMED_GROUPS:
            return GroupExpr(name)
        known = ", ".join(
            list(_INT_HEADS) + list(_PAIR_HEADS) + ["gens"] + sorted(NAMED_GROUPS)
        )
        self.error(f"unknown group {name!r}; known names: {known}", start)

    def parse_gens(self):
        self.expect("[")
        degree = self.parse_int("a degree")
        self.expect(";")
        # generators are separated by commas outside parentheses; commas
        # inside a cycle are point separators and belong to the generator
        segments = []
        seg_start = self.pos
        depth = 0
        while True:
            if self.pos >= len(self.text):
                self.error("expected ']' before end of input")
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    self.error("unbalanced ')' in generator list")
                depth -= 1
            elif depth == 0 and ch in ",]":
                segments.append((self.text[seg_start:self.pos], seg_start))
                if ch == "]":
                    self.pos += 1
                    break
                self.pos += 1
                seg_start = self.pos
                continue
            self.pos += 1
        perms = []
        for segment, at in segments:
            at += len(segment) - len(segment.lstrip())
            if not segment.strip():
                self.error("empty generator", at)
            try:
                perms.append(parse_cycles(segment, degree))
            except ValueError as e:
                self.error(str(e), at)
        return GroupExpr("gens", (degree, tuple(perms)))


def parse_group(text):
    """Parse a group expression; raises GroupSyntaxError on bad input."""
    parser = _Parser(text)
    expr = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error(f"trailing input {text[parser.pos:]!r}")
    return expr
