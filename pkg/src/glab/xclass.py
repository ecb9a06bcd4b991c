"""Descriptors for complete classes of finite groups.

A complete class is a nonempty class closed under subgroups, homomorphic
images, and extensions.  Five finitely-describable kinds are supported:

- ``pi{2,3}``          groups whose order has all prime divisors in the set
- ``solvable``         groups with trivial derived-series limit
- ``solvable-pi{2,3}`` solvable groups that are also pi-groups
- ``bounded<60``       groups whose nonabelian composition factors all have
                       order below the bound
- ``all``              every finite group

Membership depends only on the order and the multiset of nonabelian
composition-factor orders, so both are computed once per group and cached.

The prime support ``pi`` of a class is the union of the prime sets of its
members: the literal prime set for the pi-restricted kinds, and unbounded
(``None``) for the rest — every p-group is solvable with no nonabelian
factors, so the unrestricted kinds contain p-groups for every prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .config import effective_lattice_cap
from .perm import PermGroup, generated
from .structure import (
    composition_series,
    conjugacy_class_reps,
    is_solvable,
    normal_closure,
    normal_subgroups,
)

_KINDS = ("pi", "solvable", "solvable-pi", "bounded", "all")


def _primes_of(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return frozenset(out)


def _is_prime(n):
    return n >= 2 and _primes_of(n) == frozenset((n,))


@dataclass(frozen=True)
class ClassSpec:
    """A complete class of finite groups, as a finite descriptor."""

    kind: str
    primes: frozenset = None
    bound: int = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.kind in ("pi", "solvable-pi"):
            if self.primes is None:
                raise ValueError(f"{self.kind} needs a prime set")
            object.__setattr__(self, "primes", frozenset(self.primes))
            for p in self.primes:
                if not _is_prime(p):
                    raise ValueError(f"{p} is not prime")
        elif self.primes is not None:
            raise ValueError(f"{self.kind} takes no prime set")
        if self.kind == "bounded":
            if self.bound is None or self.bound < 1:
                raise ValueError("bounded needs a positive bound")
        elif self.bound is not None:
            raise ValueError(f"{self.kind} takes no bound")

    @classmethod
    def pi_groups(cls, primes):
        return cls("pi", frozenset(primes))

    @classmethod
    def solvable(cls):
        return cls("solvable")

    @classmethod
    def solvable_pi(cls, primes):
        return cls("solvable-pi", frozenset(primes))

    @classmethod
    def bounded_factors(cls, bound):
        return cls("bounded", None, int(bound))

    @classmethod
    def all_groups(cls):
        return cls("all")

    @property
    def pi(self):
        """Prime support of the class; None means every prime."""
        if self.kind in ("pi", "solvable-pi"):
            return self.primes
        return None

    def __str__(self):
        if self.kind in ("pi", "solvable-pi"):
            inner = ",".join(str(p) for p in sorted(self.primes))
            head = "pi" if self.kind == "pi" else "solvable-pi"
            return f"{head}{{{inner}}}"
        if self.kind == "bounded":
            return f"bounded<{self.bound}"
        return self.kind

    def __repr__(self):
        return f"ClassSpec({str(self)!r})"

    def accepts_profile(self, order, nonabelian_factor_orders):
        """Membership from a group profile (order, nonabelian factor orders)."""
        if self.kind == "all":
            return True
        if self.kind == "pi":
            return _primes_of(order) <= self.primes
        if self.kind == "solvable":
            return not nonabelian_factor_orders
        if self.kind == "solvable-pi":
            return (
                not nonabelian_factor_orders
                and _primes_of(order) <= self.primes
            )
        return all(o < self.bound for o in nonabelian_factor_orders)

    def is_member(self, group):
        """Class membership, by the cheapest route the kind allows.

        The pi kinds are decided by the order alone and the solvable kinds
        by a derived series; only the bounded kind ever needs composition
        factors.  This matters inside certification scans, where most
        candidate extensions are rejected long before a composition series
        would finish.
        """
        if self.kind == "all":
            return True
        order = group.order()
        if self.kind == "pi":
            return _primes_of(order) <= self.primes
        if self.kind in ("solvable", "solvable-pi"):
            if self.kind == "solvable-pi" and not _primes_of(order) <= self.primes:
                return False
            return order == 1 or is_solvable(group)
        return self.accepts_profile(*group_profile(group))

    def accepts_simple_of_order(self, order):
        """Membership of a simple group, decided from its order alone.

        A simple group of prime order is cyclic; one of composite order is
        nonabelian.  Either way the order determines membership for every
        supported kind.
        """
        if self.kind == "all":
            return True
        if self.kind == "pi":
            return _primes_of(order) <= self.primes
        if self.kind == "solvable":
            return _is_prime(order)
        if self.kind == "solvable-pi":
            return order in self.primes
        return _is_prime(order) or order < self.bound


def parse_class_spec(text):
    """Parse the textual class syntax used on the command line."""
    s = text.strip()
    if s == "all":
        return ClassSpec.all_groups()
    if s == "solvable":
        return ClassSpec.solvable()
    for head, maker in (
        ("solvable-pi{", ClassSpec.solvable_pi),
        ("pi{", ClassSpec.pi_groups),
    ):
        if s.startswith(head):
            if not s.endswith("}"):
                raise ValueError(f"unterminated prime set in {text!r}")
            inner = s[len(head):-1].strip()
            if not inner:
                return maker(frozenset())
            try:
                primes = [int(tok) for tok in inner.replace(",", " ").split()]
            except ValueError:
                raise ValueError(f"bad prime list in {text!r}") from None
            return maker(primes)
    if s.startswith("bounded<"):
        try:
            bound = int(s[len("bounded<"):])
        except ValueError:
            raise ValueError(f"bad bound in {text!r}") from None
        return ClassSpec.bounded_factors(bound)
    raise ValueError(
        f"cannot parse class {text!r}; expected pi{{..}}, solvable, "
        f"solvable-pi{{..}}, bounded<N, or all"
    )


@lru_cache(maxsize=None)
def group_profile(group):
    """(order, sorted orders of nonabelian composition factors), cached.

    Solvable groups short-circuit: they have no nonabelian factors, and
    solvability via the derived series is far cheaper than a full
    composition series.
    """
    order = group.order()
    if order == 1 or is_solvable(group):
        return order, ()
    factors = composition_series(group).factor_orders()
    nonabelian = tuple(sorted(o for o in factors if not _is_prime(o)))
    return order, nonabelian


def pi_of_group(group):
    """The set of prime divisors of the group's order."""
    return _primes_of(group.order())


def pi_of_order(n):
    return _primes_of(n)


def is_member(spec, group):
    return spec.is_member(group)


def has_no_nontrivial_x_subgroup(spec, group):
    """True iff the group has no nontrivial subgroup in the class.

    Equivalent to being a pi(X)'-group: by Cauchy a prime p in pi(X)
    dividing the order yields a subgroup of order p, which lies in every
    supported kind with p in its support; conversely any nontrivial member
    has some prime of pi(X) dividing its order.
    """
    pi = spec.pi
    if pi is None:
        return group.order() == 1
    n = group.order()
    return all(n % p for p in pi)


def _radical(group, accepts, scan_cap=None, lattice_cap=None, method=None):
    """Largest normal subgroup satisfying a class-membership predicate.

    Sound because the predicate comes from a complete class: the join of
    two normal members N1, N2 is again a member (N1N2/N1 is an image of N2,
    and extensions stay in the class), so a unique maximum exists.

    Two routes: filter the full normal-subgroup list (default below the
    lattice cap), or join the normal closures of single conjugacy classes
    that land in the class (default above the cap; every element of the
    radical has its class closure inside it, so the join is exact).
    """
    if method is None:
        method = (
            "normals"
            if group.order() <= effective_lattice_cap(lattice_cap)
            else "closures"
        )
    if method == "normals":
        members = [n for n in normal_subgroups(group, scan_cap) if accepts(n)]
        best = max(members, key=lambda n: n.order())
        for n in members:
            if not n.is_subgroup_of(best):
                raise AssertionError("normal members not contained in the largest")
        return best
    if method != "closures":
        raise ValueError(f"unknown radical method {method!r}")
    gens = []
    for x in conjugacy_class_reps(group, scan_cap):
        if x.is_identity():
            continue
        n = normal_closure(group, PermGroup(group.degree, (x,)))
        if accepts(n):
            gens.extend(n.generators)
    if not gens:
        return PermGroup.trivial(group.degree)
    return generated(group.degree, gens)


def o_x(spec, group, scan_cap=None, lattice_cap=None, method=None):
    """O_X(G): the largest normal subgroup belonging to the class."""
    return _radical(group, spec.is_member, scan_cap, lattice_cap, method)


def o_pi_prime(primes, group, scan_cap=None, lattice_cap=None, method=None):
    """The largest normal subgroup of order coprime to every given prime."""
    primes = frozenset(primes)

    def accepts(n):
        return all(n.order() % p for p in primes)

    return _radical(group, accepts, scan_cap, lattice_cap, method)


def is_x_separable(spec, group):
    """True iff every composition factor is in the class or is a pi(X)'-group.

    Equivalent to having a subnormal series whose factors each lie in the
    class or contain no nontrivial member of it: any such series refines
    to a composition series, every kind here is closed under sections, and
    "no nontrivial members" means pi(X)'-group, also section-closed.
    """
    order = group.order()
    if order == 1:
        return True
    if is_solvable(group):
        factors = []
        n = order
        d = 2
        while n > 1:
            while n % d == 0:
                factors.append(d)
                n //= d
            d += 1
    else:
        factors = composition_series(group).factor_orders()
    pi = spec.pi
    for o in factors:
        if spec.accepts_simple_of_order(o):
            continue
        if pi is not None and not (_primes_of(o) & pi):
            continue
        return False
    return True


def standard_family(group):
    """The finite class family quantified over in harness runs.

    Pi and solvable-pi classes for every subset of pi(G), the solvable
    class, and bounded-factor classes at the thresholds 2, 60, 61, |G| —
    covering the pure-prime, solvable, and nonabelian-factor regimes.
    """
    ps = sorted(pi_of_group(group))
    subsets = [
        frozenset(c)
        for r in range(len(ps) + 1)
        for c in combinations(ps, r)
    ]
    fam = [ClassSpec.pi_groups(s) for s in subsets]
    fam.append(ClassSpec.solvable())
    fam.extend(ClassSpec.solvable_pi(s) for s in subsets)
    fam.extend(
        ClassSpec.bounded_factors(n)
        for n in sorted({2, 60, 61, max(group.order(), 1)})
    )
    return tuple(fam)
