"""Command-line front end.

Three commands share one executable:

``glab analyze <group> [--json]``
    Order, prime support, solvability, composition-factor orders, and —
    when the order fits under the lattice cap — the subgroup-class table.
    Groups above the cap get a partial summary with the table flagged as
    skipped.

``glab verify <suite> [group] [--group <expr>] [--class <spec>] [--json]``
    Run one verification suite (or ``all``) over the default catalog, or
    over a single group given by expression.  Exit status 0 iff no check
    failed.

``glab search-sm [--json] [--pair <substring>]``
    For each almost-simple pair S <= Aut(S) in the catalog, compare the
    strongly submaximal class members of every intermediate group G
    against the submaximal members witnessed through subnormal embeddings
    in the same automorphism realization, and report any of the latter
    missing from the former.  The search reports; it does not assert
    emptiness.

Exit codes: 0 success, 1 verification failure, 2 usage or cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from .catalog import almost_simple_pairs
from .config import CapExceeded
from .groupspec import GroupSyntaxError, parse_group
from .perm import format_cycles
from .structure import composition_series, is_subnormal, quotient
from .verify import SUITE_NAMES, reports_to_json, run_suite
from .xclass import ClassSpec, _primes_of, parse_class_spec
from .xmax import (
    cached_lattice,
    result_keys,
    strong_submax_almost_simple,
    submax_in_ambient,
)


def _gens(group):
    return [format_cycles(p) for p in group.generators] or ["()"]


# ---------------------------------------------------------------------------
# analyze


def analyze_group(expr, lattice_cap=None, scan_cap=None):
    """Structural summary of one group expression, as a plain dict."""
    group = expr.build(scan_cap)
    order = group.order()
    out = {
        "group": str(expr),
        "degree": group.degree,
        "order": order,
        "primes": sorted(_primes_of(order)),
        "solvable": ClassSpec.solvable().is_member(group),
        "partial": False,
    }
    try:
        series = composition_series(group, scan_cap)
        out["composition_factor_orders"] = list(series.factor_orders())
    except CapExceeded as e:
        out["composition_factor_orders"] = None
        out["partial"] = True
        out["skipped"] = {"composition_factor_orders": str(e)}
    try:
        lattice = cached_lattice(group, lattice_cap, scan_cap)
        out["subgroup_classes"] = [
            {"order": cls.order, "size": cls.size} for cls in lattice.classes
        ]
    except CapExceeded as e:
        out["subgroup_classes"] = None
        out["partial"] = True
        out.setdefault("skipped", {})["subgroup_classes"] = str(e)
    return out


def _print_analysis(info):
    print(f"group: {info['group']}")
    print(f"degree: {info['degree']}")
    print(f"order: {info['order']}")
    print(f"prime support: {{{', '.join(map(str, info['primes']))}}}")
    print(f"solvable: {'yes' if info['solvable'] else 'no'}")
    factors = info["composition_factor_orders"]
    if factors is None:
        print(f"composition factor orders: skipped ({info['skipped']['composition_factor_orders']})")
    else:
        print(f"composition factor orders: {factors}")
    classes = info["subgroup_classes"]
    if classes is None:
        print(f"subgroup classes: skipped ({info['skipped']['subgroup_classes']})")
    else:
        total = sum(c["size"] for c in classes)
        print(f"subgroup classes: {len(classes)} ({total} subgroups)")
        by_order = {}
        for c in classes:
            by_order.setdefault(c["order"], []).append(c["size"])
        for order in sorted(by_order):
            sizes = by_order[order]
            print(
                f"  order {order:>6}: {len(sizes)} class(es), "
                f"sizes {sorted(sizes)}"
            )
    if info["partial"]:
        print("note: partial output; some sections exceeded a cap")


# ---------------------------------------------------------------------------
# search-sm


def _search_family(socle_group):
    """Classes to search against one almost-simple pair: every pi and
    solvable-pi class over a proper subset of the socle's prime support
    (the socle must lie outside the class), plus the solvable class and
    composition-factor bounds below and at the socle order."""
    primes = sorted(_primes_of(socle_group.order()))
    specs = []
    for size in range(len(primes)):
        for subset in combinations(primes, size):
            specs.append(ClassSpec.pi_groups(subset))
            specs.append(ClassSpec.solvable_pi(subset))
    specs.append(ClassSpec.solvable())
    for bound in sorted({60, socle_group.order()}):
        specs.append(ClassSpec.bounded_factors(bound))
    seen = set()
    out = []
    for spec in specs:
        if spec not in seen:
            seen.add(spec)
            out.append(spec)
    return out


def _intermediate_groups(socle_img, aut, lattice_cap=None, scan_cap=None):
    """All groups between the socle and its automorphism realization,
    via the subgroup lattice of the (small) outer quotient."""
    q = quotient(aut, socle_img, scan_cap)
    lattice = cached_lattice(q.image_group, lattice_cap, scan_cap)
    seen = set()
    out = []
    for cls in lattice.classes:
        for sub, _ in cls.members():
            candidate = q.preimage_subgroup(sub)
            key = candidate.key(scan_cap)
            if key not in seen:
                seen.add(key)
                out.append(candidate)
    out.sort(key=lambda g: (g.order(), tuple(sorted(g.key(scan_cap)))))
    return out


def search_sm_discrepancies(pair_filter=None, lattice_cap=None, scan_cap=None):
    """Compare strongly submaximal members against subnormally witnessed
    submaximal members for every intermediate group of every almost-simple
    catalog pair.  Returns one row per (pair, group, class)."""
    rows = []
    for name, socle_img, aut in almost_simple_pairs():
        if pair_filter is not None and pair_filter not in name:
            continue
        intermediates = _intermediate_groups(socle_img, aut, lattice_cap, scan_cap)
        family = _search_family(socle_img)
        for idx, g in enumerate(intermediates):
            overgroups = [
                star
                for star in intermediates
                if g.is_subgroup_of(star) and is_subnormal(star, g).ok
            ]
            for spec in family:
                strong = result_keys(
                    strong_submax_almost_simple(spec, g, aut, lattice_cap, scan_cap),
                    scan_cap,
                )
                relative = {}
                for star in overgroups:
                    for w in submax_in_ambient(
                        spec, star, g, "subnormal", lattice_cap, scan_cap
                    ):
                        relative.setdefault(w.result.key(scan_cap), w)
                missing = [
                    w for key, w in sorted(
                        relative.items(), key=lambda kv: tuple(sorted(kv[0]))
                    )
                    if key not in strong
                ]
                rows.append(
                    {
                        "pair": name,
                        "group": f"intermediate {idx + 1}/{len(intermediates)}"
                        f" (order {g.order()})",
                        "class": str(spec),
                        "strong_count": len(strong),
                        "relative_count": len(relative),
                        "discrepancies": [
                            {
                                "subgroup": _gens(w.result),
                                "order": w.result.order(),
                                "ambient_order": w.ambient.order(),
                            }
                            for w in missing
                        ],
                    }
                )
    return rows


def _print_search(rows):
    by_pair = {}
    for row in rows:
        by_pair.setdefault(row["pair"], []).append(row)
    total = 0
    for pair, pair_rows in by_pair.items():
        groups = {r["group"] for r in pair_rows}
        classes = {r["class"] for r in pair_rows}
        found = [r for r in pair_rows if r["discrepancies"]]
        total += len(found)
        print(
            f"pair {pair}: {len(groups)} groups x {len(classes)} classes, "
            f"{len(found)} with discrepancies"
        )
        for r in found:
            print(f"  {r['group']} [{r['class']}]:")
            for d in r["discrepancies"]:
                print(
                    f"    order {d['order']} subgroup {d['subgroup']} "
                    f"(ambient order {d['ambient_order']})"
                )
    if total == 0:
        print("no discrepancies: every subnormally witnessed submaximal "
              "member is strongly submaximal here")


# ---------------------------------------------------------------------------
# verify


def _print_reports(reports):
    for r in reports:
        spec = f" [{r.class_spec}]" if r.class_spec is not None else ""
        flag = " (restricted)" if r.restricted else ""
        print(f"{r.verdict:7} {r.check_id:13} {r.group}{spec}"
              f" ({r.wall_time_ms} ms){flag}")
        if not r.ok:
            print(f"        witness: {json.dumps(r.witness, sort_keys=True)}")
    verdicts = {"pass": 0, "skipped": 0, "fail": 0}
    for r in reports:
        verdicts[r.verdict] += 1
    print(
        f"{len(reports)} checks: {verdicts['pass']} passed, "
        f"{verdicts['skipped']} skipped, {verdicts['fail']} failed"
    )


# ---------------------------------------------------------------------------
# argument plumbing


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="glab",
        description="Finite permutation groups: analysis and verification "
        "of maximal/submaximal subgroup properties for complete classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="summarize one group")
    p_analyze.add_argument("group", help="group expression, e.g. sym(4)")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument("--lattice-cap", type=int, default=None)
    p_analyze.add_argument("--scan-cap", type=int, default=None)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument(
        "group_pos",
        nargs="?",
        default=None,
        metavar="group",
        help="optional group expression to verify instead of the catalog",
    )
    p_verify.add_argument("--group", dest="group_flag", default=None)
    p_verify.add_argument("--class", dest="class_spec", default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--lattice-cap", type=int, default=None)
    p_verify.add_argument("--scan-cap", type=int, default=None)

    p_search = sub.add_parser(
        "search-sm",
        help="search almost-simple pairs for submaximal members without "
        "a strong witness",
    )
    p_search.add_argument("--json", action="store_true")
    p_search.add_argument(
        "--pair", default=None, help="only pairs whose name contains this"
    )
    p_search.add_argument("--lattice-cap", type=int, default=None)
    p_search.add_argument("--scan-cap", type=int, default=None)
    return parser


def _cmd_analyze(args):
    expr = parse_group(args.group)
    info = analyze_group(expr, args.lattice_cap, args.scan_cap)
    if args.json:
        print(json.dumps(info, indent=2))
    else:
        _print_analysis(info)
    return 0


def _cmd_verify(args):
    if args.group_pos is not None and args.group_flag is not None:
        raise ValueError("give the group either positionally or with --group")
    text = args.group_flag if args.group_flag is not None else args.group_pos
    groups = None
    if text is not None:
        expr = parse_group(text)
        groups = [(str(expr), expr.build(args.scan_cap))]
    class_filter = (
        parse_class_spec(args.class_spec) if args.class_spec is not None else None
    )
    reports = run_suite(
        args.suite,
        groups=groups,
        class_filter=class_filter,
        lattice_cap=args.lattice_cap,
        scan_cap=args.scan_cap,
    )
    if args.json:
        print(reports_to_json(reports))
    else:
        _print_reports(reports)
    return 0 if all(r.ok for r in reports) else 1


def _cmd_search_sm(args):
    rows = search_sm_discrepancies(args.pair, args.lattice_cap, args.scan_cap)
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        _print_search(rows)
    return 0


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "search-sm": _cmd_search_sm,
    }
    try:
        return handlers[args.command](args)
    except (GroupSyntaxError, CapExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
