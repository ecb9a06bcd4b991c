"""Build groups, compute orders, test membership.

Permutations act on 0-based points internally; cycle notation at the
boundary is 1-based, so ``(1 2 3)`` maps point 0 to 1, 1 to 2, 2 to 0.
Composition is left to right: ``(a * b)(x) = b(a(x))``.
"""

from glab import (
    alternating,
    format_cycles,
    generated,
    parse_cycles,
    parse_group,
    symmetric,
)


def main():
    s5 = symmetric(5)
    a5 = alternating(5)
    print(f"Sym(5): degree {s5.degree}, order {s5.order()}")
    print(f"Alt(5): degree {a5.degree}, order {a5.order()}")

    # membership through the stabilizer chain, no element listing
    three_cycle = parse_cycles("(1 2 3)", 5)
    transposition = parse_cycles("(4 5)", 5)
    print(f"(1 2 3) in Alt(5)? {a5.contains(three_cycle)}")
    print(f"(4 5)   in Alt(5)? {a5.contains(transposition)}")

    # composition is left to right
    product = three_cycle * transposition
    print(f"(1 2 3) * (4 5) = {format_cycles(product)}")

    # groups from explicit generators
    v4 = generated(4, [parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    print(f"Klein four group: order {v4.order()}, "
          f"elements {[format_cycles(x) for x in v4.elements()]}")

    # the same things through the expression language
    for text in ["dihedral(10)", "direct(sym(3), cyclic(4))", "psl27"]:
        g = parse_group(text).build()
        print(f"{text:24} -> degree {g.degree:>2}, order {g.order()}")


if __name__ == "__main__":
    main()
