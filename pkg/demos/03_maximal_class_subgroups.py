"""Maximal X-subgroups for complete classes X.

A complete class is closed under subgroups, quotients, and extensions;
pi-groups and solvable groups are the canonical examples.  m_X(G) is the
set of subgroups maximal by inclusion among members of X — for X = all
p-groups this recovers the Sylow p-subgroups, and in general it behaves
far less uniformly: m_X(G) can split into several conjugacy classes.
"""

from glab import (
    ClassSpec,
    alternating,
    is_x_separable,
    maximal_x_subgroups,
    o_x,
    parse_class_spec,
    symmetric,
)


def show(spec, group, name):
    classes = maximal_x_subgroups(spec, group)
    profile = ", ".join(f"order {c.order} x{c.size}" for c in classes)
    sep = "separable" if is_x_separable(spec, group) else "not separable"
    radical = o_x(spec, group).order()
    print(f"m_{spec}({name}): {profile}")
    print(f"    {len(classes)} class(es); {name} is {sep} for {spec}; "
          f"O_{spec} has order {radical}")


def main():
    a5 = alternating(5)
    s4 = symmetric(4)

    # Sylow case: always one class
    show(parse_class_spec("pi{2}"), s4, "sym(4)")

    # solvable subgroups of Alt(5) split into three maximal classes
    show(ClassSpec.solvable(), a5, "alt(5)")

    # {2,5}-subgroups of Alt(5): Klein fours and dihedrals of order 10
    show(parse_class_spec("pi{2,5}"), a5, "alt(5)")

    # in an X-separable group all X-maximal subgroups are conjugate,
    # so sym(4) has a single class for every class spec
    show(parse_class_spec("solvable-pi{2,3}"), s4, "sym(4)")


if __name__ == "__main__":
    main()
