"""Walk the full subgroup lattice of Sym(4).

The enumerator works one conjugacy class at a time: cyclic subgroups of
prime order seed the lattice, and each level extends a known class by a
normalizing element of prime order.  Every subgroup of the group appears
in exactly one class.
"""

from glab import (
    enumerate_subgroups,
    format_cycles,
    normalizer,
    sylow_subgroup,
    symmetric,
)


def main():
    s4 = symmetric(4)
    lattice = enumerate_subgroups(s4)
    total = sum(cls.size for cls in lattice.classes)
    print(f"Sym(4): {len(lattice.classes)} conjugacy classes, {total} subgroups\n")

    print(f"{'order':>6} {'size':>5}  representative generators")
    for cls in lattice.classes:
        gens = ", ".join(format_cycles(p) for p in cls.representative.generators)
        print(f"{cls.order:>6} {cls.size:>5}  {gens or '()'}")

    # Sylow subgroups are the maximal p-subgroups; their count is the
    # index of the normalizer
    print()
    for p in (2, 3):
        syl = sylow_subgroup(s4, p)
        nz = normalizer(s4, syl)
        count = s4.order() // nz.order()
        print(f"Sylow {p}-subgroup: order {syl.order()}, "
              f"normalizer order {nz.order()}, so {count} conjugates")


if __name__ == "__main__":
    main()
