"""Group constructors and the default verification catalog.

All groups are permutation groups of explicit degree.  The matrix-origin
entries (linear and projective linear groups over small fields) are built
from their natural actions — on the nonzero vectors of GF(3)^2 for the
degree-8 linear groups, and on the projective lines over GF(7) and GF(9)
for the degree-8 and degree-10 projective families — rather than shipped
as opaque generator tables, so the construction is checkable.
"""

from __future__ import annotations

from .config import CapExceeded, effective_scan_cap
from .perm import PermGroup, Permutation, generated


# ---------------------------------------------------------------------------
# elementary constructors


def symmetric(n):
    """Sym(n) in its natural action."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        return PermGroup.trivial(1)
    transposition = Permutation._make((1, 0) + tuple(range(2, n)))
    if n == 2:
        return generated(2, [transposition])
    ncycle = Permutation._make(tuple(range(1, n)) + (0,))
    return generated(n, [transposition, ncycle])


def alternating(n):
    """Alt(n) in its natural action; trivial for n < 3."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n < 3:
        return PermGroup.trivial(n)
    gens = []
    for i in range(1, n - 1):
        images = list(range(n))
        images[0], images[i], images[i + 1] = images[i], images[i + 1], images[0]
        gens.append(Permutation._make(tuple(images)))
    return generated(n, gens)


def cyclic(n):
    """Cyclic group of order n on n points (trivial for n = 1)."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n == 1:
        return PermGroup.trivial(1)
    return generated(n, [Permutation._make(tuple(range(1, n)) + (0,))])


def dihedral(order):
    """Dihedral group of the given (even, >= 6) order, acting on the n-gon."""
    if order < 6 or order % 2:
        raise ValueError(
            "dihedral takes an even order >= 6; use cyclic(2) or v4 below that"
        )
    n = order // 2
    rot = Permutation._make(tuple(range(1, n)) + (0,))
    ref = Permutation._make(tuple((n - x) % n for x in range(n)))
    return generated(n, [rot, ref])


def direct_product(*groups):
    """Outer direct product on the disjoint union of the factors' points."""
    product, _ = direct_product_pieces(*groups)
    return product


def direct_product_pieces(*groups):
    """The outer direct product plus each factor embedded as a subgroup."""
    if not groups:
        raise ValueError("need at least one factor")
    total = sum(g.degree for g in groups)
    gens = []
    embedded = []
    offset = 0
    for g in groups:
        shifted = [_shift(p, offset, total) for p in g.generators]
        gens.extend(shifted)
        embedded.append(PermGroup(total, tuple(shifted)))
        offset += g.degree
    return PermGroup(total, tuple(gens)), embedded


def _shift(p, offset, total):
    images = list(range(total))
    for x, y in enumerate(p.images):
        images[offset + x] = offset + y
    return Permutation._make(tuple(images))


def wreath_product(base, top, scan_cap=None):
    """Regular wreath product: |top| coordinate copies of the base, with the
    top group permuting the copies by right multiplication on itself.

    Degree is deg(base) * |top|.  Generators: the base's generators acting
    in the first copy, plus the top's generators permuting copies; the
    conjugates of the first copy under the top action fill the remaining
    coordinates, so these generate the full product of order
    |base|^|top| * |top|.
    """
    cap = effective_scan_cap(scan_cap)
    if top.order() > cap:
        raise CapExceeded("wreath top enumeration", top.order(), cap)
    top_elems = top.elements(scan_cap)
    block_of = {e.images: i for i, e in enumerate(top_elems)}
    d = base.degree
    k = len(top_elems)
    degree = d * k
    gens = []
    for g in base.generators:
        images = list(range(degree))
        for x, y in enumerate(g.images):
            images[x] = y
        gens.append(Permutation._make(tuple(images)))
    for t in top.generators:
        images = list(range(degree))
        for b, e in enumerate(top_elems):
            target = block_of[(e * t).images]
            for x in range(d):
                images[b * d + x] = target * d + x
        gens.append(Permutation._make(tuple(images)))
    return PermGroup(degree, tuple(gens))


def wreath_base_subgroup(base, top, scan_cap=None):
    """The base subgroup (the direct power of `base`) inside wreath_product."""
    cap = effective_scan_cap(scan_cap)
    if top.order() > cap:
        raise CapExceeded("wreath top enumeration", top.order(), cap)
    k = top.order()
    d = base.degree
    degree = d * k
    gens = []
    for b in range(k):
        for g in base.generators:
            images = list(range(degree))
            for x, y in enumerate(g.images):
                images[b * d + x] = b * d + y
            gens.append(Permutation._make(tuple(images)))
    return PermGroup(degree, tuple(gens))


# ---------------------------------------------------------------------------
# linear groups over GF(3), degree 8


_GF3_VECTORS = [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]
_GF3_INDEX = {v: i for i, v in enumerate(_GF3_VECTORS)}


def _matrix_perm_gf3(m):
    """The permutation of the 8 nonzero vectors of GF(3)^2 induced by a
    matrix acting on row vectors from the right."""
    (a, b), (c, d) = m
    images = []
    for x, y in _GF3_VECTORS:
        images.append(_GF3_INDEX[((x * a + y * c) % 3, (x * b + y * d) % 3)])
    return Permutation(tuple(images))


def special_linear_2_3():
    """SL(2,3) of order 24 on the 8 nonzero vectors of GF(3)^2."""
    return generated(
        8,
        [
            _matrix_perm_gf3(((1, 1), (0, 1))),
            _matrix_perm_gf3(((0, 2), (1, 0))),
        ],
    )


def general_linear_2_3():
    """GL(2,3) of order 48 on the 8 nonzero vectors of GF(3)^2."""
    return generated(
        8,
        [
            _matrix_perm_gf3(((1, 1), (0, 1))),
            _matrix_perm_gf3(((0, 2), (1, 0))),
            _matrix_perm_gf3(((1, 0), (0, 2))),
        ],
    )


# ---------------------------------------------------------------------------
# projective line over GF(7), degree 8 (points 0..6 and infinity = 7)


_GF7_INF = 7


def _gf7_perm(f):
    return Permutation(tuple(f(z) for z in range(8)))


def _gf7_translation(z):
    return (z + 1) % 7 if z != _GF7_INF else _GF7_INF


def _gf7_inversion(z):
    # z -> -1/z
    if z == _GF7_INF:
        return 0
    if z == 0:
        return _GF7_INF
    return (-pow(z, 5, 7)) % 7  # z^5 = z^-1 in GF(7)*


def _gf7_scale3(z):
    return (3 * z) % 7 if z != _GF7_INF else _GF7_INF


def projective_special_linear_2_7():
    """PSL(2,7) of order 168 on the 8 points of the projective line over GF(7)."""
    return generated(8, [_gf7_perm(_gf7_translation), _gf7_perm(_gf7_inversion)])


def projective_general_linear_2_7():
    """PGL(2,7) of order 336: PSL(2,7) plus scaling by the nonsquare 3."""
    return generated(
        8,
        [
            _gf7_perm(_gf7_translation),
            _gf7_perm(_gf7_inversion),
            _gf7_perm(_gf7_scale3),
        ],
    )


# ---------------------------------------------------------------------------
# projective line over GF(9), degree 10
#
# GF(9) = GF(3)[i] with i^2 = -1; element a+bi encoded as the point a + 3b,
# infinity encoded as 9.  The four index-two overgroups of PSL(2,9) inside
# PGammaL(2,9) come from the diagonal map (multiplication by the nonsquare
# 1+i) and the Frobenius map z -> z^3.


_GF9_INF = 9


def _gf9_mul(x, y):
    a, b = x
    c, d = y
    return ((a * c - b * d) % 3, (a * d + b * c) % 3)


def _gf9_inv(x):
    a, b = x
    norm = (a * a + b * b) % 3
    ninv = 1 if norm == 1 else 2
    return ((a * ninv) % 3, (-b * ninv) % 3)


def _gf9_point(x):
    return x[0] + 3 * x[1]


def _gf9_element(z):
    return (z % 3, z // 3)


def _gf9_perm(f):
    return Permutation(tuple(f(z) for z in range(10)))


def _gf9_add_one(z):
    if z == _GF9_INF:
        return z
    a, b = _gf9_element(z)
    return _gf9_point(((a + 1) % 3, b))


def _gf9_add_i(z):
    if z == _GF9_INF:
        return z
    a, b = _gf9_element(z)
    return _gf9_point((a, (b + 1) % 3))


def _gf9_inversion(z):
    # z -> -1/z
    if z == _GF9_INF:
        return 0
    if z == 0:
        return _GF9_INF
    a, b = _gf9_inv(_gf9_element(z))
    return _gf9_point(((-a) % 3, (-b) % 3))


def _gf9_diagonal(z):
    # z -> (1+i) z, with 1+i a generator of GF(9)* (hence a nonsquare)
    if z == _GF9_INF:
        return z
    return _gf9_point(_gf9_mul(_gf9_element(z), (1, 1)))


def _gf9_frobenius(z):
    # z -> z^3, i.e. a+bi -> a-bi in characteristic 3
    if z == _GF9_INF:
        return z
    a, b = _gf9_element(z)
    return _gf9_point((a, (-b) % 3))


def _psl29_generators():
    return [
        _gf9_perm(_gf9_add_one),
        _gf9_perm(_gf9_add_i),
        _gf9_perm(_gf9_inversion),
    ]


def projective_special_linear_2_9():
    """PSL(2,9) of order 360 on 10 points (isomorphic to Alt(6))."""
    return generated(10, _psl29_generators())


def projective_general_linear_2_9():
    """PGL(2,9) of order 720: PSL(2,9) plus the diagonal map."""
    return generated(10, _psl29_generators() + [_gf9_perm(_gf9_diagonal)])


def projective_semilinear_2_9():
    """PSigmaL(2,9) of order 720: PSL(2,9) plus the Frobenius map."""
    return generated(10, _psl29_generators() + [_gf9_perm(_gf9_frobenius)])


def mathieu_10():
    """M10 of order 720: PSL(2,9) extended by diagonal-composed-with-Frobenius."""
    twist = _gf9_perm(lambda z: _gf9_diagonal(_gf9_frobenius(z)))
    return generated(10, _psl29_generators() + [twist])


def projective_gamma_linear_2_9():
    """PGammaL(2,9) of order 1440, the full automorphism group of Alt(6)."""
    return generated(
        10,
        _psl29_generators()
        + [_gf9_perm(_gf9_diagonal), _gf9_perm(_gf9_frobenius)],
    )


def klein_four():
    """V4 as the double-transposition subgroup on 4 points."""
    return generated(
        4,
        [
            Permutation((1, 0, 3, 2)),
            Permutation((2, 3, 0, 1)),
        ],
    )


# ---------------------------------------------------------------------------
# catalog


NAMED_GROUPS = {
    "v4": klein_four,
    "sl23": special_linear_2_3,
    "gl23": general_linear_2_3,
    "psl27": projective_special_linear_2_7,
    "pgl27": projective_general_linear_2_7,
    "psl29": projective_special_linear_2_9,
    "pgl29": projective_general_linear_2_9,
    "m10": mathieu_10,
    "psigmal29": projective_semilinear_2_9,
    "pgammal29": projective_gamma_linear_2_9,
    # the ambient side of the Alt(6)-inside-its-automorphism-group pair;
    # the matching socle is psl29 (see almost_simple_pairs)
    "aut_a6_pair": projective_gamma_linear_2_9,
}


_PRODUCT_FACTORS = [
    ("cyclic(2)", cyclic, 2),
    ("cyclic(3)", cyclic, 3),
    ("cyclic(4)", cyclic, 4),
    ("cyclic(5)", cyclic, 5),
    ("cyclic(6)", cyclic, 6),
    ("v4", klein_four, None),
    ("sym(3)", symmetric, 3),
    ("dihedral(8)", dihedral, 8),
    ("alt(4)", alternating, 4),
    ("sym(4)", symmetric, 4),
    ("sl23", special_linear_2_3, None),
    ("alt(5)", alternating, 5),
    ("sym(5)", symmetric, 5),
    ("psl27", projective_special_linear_2_7, None),
]


def _product_entries(max_order=400):
    factors = []
    for name, builder, arg in _PRODUCT_FACTORS:
        g = builder(arg) if arg is not None else builder()
        factors.append((name, g))
    entries = []
    for i, (name_a, a) in enumerate(factors):
        for name_b, b in factors[i:]:
            if a.order() * b.order() <= max_order:
                entries.append(
                    (f"direct({name_a},{name_b})", direct_product(a, b))
                )
    return entries


def default_catalog(max_order=None):
    """The named groups every verification suite quantifies over.

    Bases: symmetric and alternating groups through degree 6, cyclic groups
    through order 24, dihedral groups through order 24, the Klein four
    group, the degree-8 linear and projective groups, direct products of a
    curated factor list with product order <= 400, and the order-7200
    regular wreath product of Alt(5) by C2.
    """
    entries = []
    for n in range(2, 7):
        entries.append((f"sym({n})", symmetric(n)))
    for n in range(3, 7):
        entries.append((f"alt({n})", alternating(n)))
    for n in range(1, 25):
        entries.append((f"cyclic({n})", cyclic(n)))
    for order in range(6, 25, 2):
        entries.append((f"dihedral({order})", dihedral(order)))
    entries.append(("v4", klein_four()))
    entries.append(("sl23", special_linear_2_3()))
    entries.append(("gl23", general_linear_2_3()))
    entries.append(("psl27", projective_special_linear_2_7()))
    entries.extend(_product_entries())
    entries.append(
        ("wreath(alt(5),cyclic(2))", wreath_product(alternating(5), cyclic(2)))
    )
    if max_order is not None:
        entries = [(n, g) for n, g in entries if g.order() <= max_order]
    return entries


def almost_simple_pairs():
    """(name, socle image, ambient automorphism realization) triples.

    Each pair shares one degree, with the socle a (subgroup-)normal simple
    group and the ambient realizing its full automorphism group on the
    same points.
    """
    return [
        ("alt(5) in sym(5)", alternating(5), symmetric(5)),
        (
            "psl27 in pgl27",
            projective_special_linear_2_7(),
            projective_general_linear_2_7(),
        ),
        (
            "alt(6) in aut(alt(6))",
            projective_special_linear_2_9(),
            projective_gamma_linear_2_9(),
        ),
    ]
