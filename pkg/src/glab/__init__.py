"""Finite permutation groups, complete-class maximal subgroups, and an
exhaustive verification harness for their structure theory.

The layers, bottom to top:

- :mod:`glab.perm` — permutations, groups via stabilizer chains, cosets,
  normalizers, conjugacy of subgroups.
- :mod:`glab.lattice` — full subgroup lattices up to conjugacy, Sylow
  subgroups.
- :mod:`glab.structure` — normality, subnormality, quotients, series,
  simplicity.
- :mod:`glab.xclass` — complete classes of finite groups (pi-groups,
  solvable groups, composition-factor bounds) and class-local radicals.
- :mod:`glab.xmax` — maximal X-subgroups, certification without lattices,
  submaximality through ambient embeddings.
- :mod:`glab.verify` — one check per theorem shape, suites, JSON reports.
- :mod:`glab.catalog`, :mod:`glab.groupspec`, :mod:`glab.cli` — named
  groups, the group-expression DSL, and the ``glab`` executable.
"""

from .catalog import (
    almost_simple_pairs,
    alternating,
    cyclic,
    default_catalog,
    dihedral,
    direct_product,
    klein_four,
    symmetric,
    wreath_product,
)
from .config import (
    CapExceeded,
    ContainmentError,
    DegreeMismatch,
    DEFAULT_LATTICE_CAP,
    DEFAULT_SCAN_CAP,
)
from .groupspec import GroupExpr, GroupSyntaxError, parse_group
from .lattice import all_sylow_subgroups, enumerate_subgroups, sylow_subgroup
from .perm import (
    PermGroup,
    Permutation,
    are_conjugate_subgroups,
    centralizer,
    format_cycles,
    generated,
    intersection,
    normalizer,
    parse_cycles,
)
from .structure import (
    composition_series,
    is_simple,
    is_subnormal,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    project,
    quotient,
)
from .verify import (
    SUITE_NAMES,
    VerificationReport,
    reports_to_json,
    run_suite,
)
from .xclass import (
    ClassSpec,
    group_profile,
    is_x_separable,
    o_x,
    parse_class_spec,
    standard_family,
)
from .xmax import (
    AmbientWitness,
    all_maximal_x_subgroups,
    certify_x_maximal,
    direct_product_submax,
    maximal_subgroup_classes,
    maximal_x_subgroups,
    socle,
    strong_submax_almost_simple,
    submax_in_ambient,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientWitness",
    "CapExceeded",
    "ClassSpec",
    "ContainmentError",
    "DEFAULT_LATTICE_CAP",
    "DEFAULT_SCAN_CAP",
    "DegreeMismatch",
    "GroupExpr",
    "GroupSyntaxError",
    "PermGroup",
    "Permutation",
    "SUITE_NAMES",
    "VerificationReport",
    "all_maximal_x_subgroups",
    "all_sylow_subgroups",
    "almost_simple_pairs",
    "alternating",
    "are_conjugate_subgroups",
    "centralizer",
    "certify_x_maximal",
    "composition_series",
    "cyclic",
    "default_catalog",
    "dihedral",
    "direct_product",
    "direct_product_submax",
    "enumerate_subgroups",
    "format_cycles",
    "generated",
    "group_profile",
    "intersection",
    "is_simple",
    "is_subnormal",
    "is_x_separable",
    "klein_four",
    "maximal_subgroup_classes",
    "maximal_x_subgroups",
    "minimal_normal_subgroups",
    "normal_closure",
    "normal_subgroups",
    "normalizer",
    "o_x",
    "parse_class_spec",
    "parse_cycles",
    "parse_group",
    "project",
    "quotient",
    "reports_to_json",
    "run_suite",
    "socle",
    "standard_family",
    "strong_submax_almost_simple",
    "submax_in_ambient",
    "sylow_subgroup",
    "symmetric",
    "wreath_product",
]
