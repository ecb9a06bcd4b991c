"""Shared limits and error types.

Order caps are configuration, not constants.  Operations that have to walk
group elements honour ``scan_cap``; operations that have to enumerate whole
subgroup lattices honour ``lattice_cap``.  Exceeding a cap raises
``CapExceeded`` rather than silently truncating.
"""

from __future__ import annotations

DEFAULT_LATTICE_CAP = 2000
DEFAULT_SCAN_CAP = 10_000


class DegreeMismatch(ValueError):
    """Permutations or groups over different point sets were combined."""


class ContainmentError(ValueError):
    """An argument was required to be a subgroup of another and is not."""


class CapExceeded(RuntimeError):
    """A configured order cap was exceeded.

    Carries enough context to tell the caller which knob to raise.
    """

    def __init__(self, what, needed, cap):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: needs {needed}, cap is {cap}")


def effective_lattice_cap(cap=None):
    return DEFAULT_LATTICE_CAP if cap is None else cap


def effective_scan_cap(cap=None):
    return DEFAULT_SCAN_CAP if cap is None else cap
