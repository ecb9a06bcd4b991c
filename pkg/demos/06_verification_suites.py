"""Run verification suites programmatically and read their reports.

Each suite checks one theorem-shaped statement over (group, class)
instances drawn from the default catalog.  Reports are plain dataclasses
with a JSON rendering; a failing report carries a witness detailed
enough to replay the instance by hand.  Reports from checks that ran on
explicitly supplied subgroup lists (groups too big for lattice
enumeration) carry ``restricted: true``.
"""

from glab import reports_to_json, run_suite, symmetric
from glab.xclass import ClassSpec


def main():
    # one group, full standard class family
    reports = run_suite("wh-subnormal", groups=[("sym(4)", symmetric(4))])
    print(f"wh-subnormal on sym(4): {len(reports)} class specs")
    for r in reports:
        print(f"  {r.verdict:5} [{r.class_spec}] {r.witness}")

    # same suite, one class only
    reports = run_suite(
        "wh-subnormal",
        groups=[("sym(4)", symmetric(4))],
        class_filter=ClassSpec.pi_groups((3,)),
    )
    print("\nsingle-class run as JSON:")
    print(reports_to_json(reports))

    # the wreath suite includes a restricted-enumeration instance: the
    # order-7200 wreath product is far beyond the lattice cap, so its
    # maximal subgroups are certified directly instead of enumerated
    reports = run_suite("wreath")
    r = reports[0]
    print(f"\nwreath suite: {r.verdict} on {r.group}, "
          f"witness order {r.witness['witness_order']}")


if __name__ == "__main__":
    main()
