"""Cofinitely-standard subsets of the integers.

A separating curve assigns each discrete end slot (a puncture on the
bi-infinite flute, a copy-indexed end slot in general) to its left or right
side.  The set of right-side slots always agrees with a threshold set
``{n : n >= k}`` outside a finite symmetric difference, which is what this
module encodes.

Normal form: ``threshold`` is the least ``t`` with ``{n : n >= t}``
contained in the set, and ``flips`` lists the members strictly below it.
Two assignments are equal iff they normalize identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable


@dataclass(frozen=True)
class SideAssignment:
    """The set {n >= threshold} XOR flips, kept in threshold normal form."""

    threshold: int
    flips: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        t, f = _normalize(self.threshold, self.flips)
        object.__setattr__(self, "threshold", t)
        object.__setattr__(self, "flips", f)

    # -- membership ---------------------------------------------------

    def __contains__(self, n: int) -> bool:
        return (n >= self.threshold) != (n in self.flips)

    def members_below(self, m: int) -> FrozenSet[int]:
        """All members strictly below m (finite for every m)."""
        if m <= self.threshold:
            return frozenset(x for x in self.flips if x < m)
        return self.flips | frozenset(range(self.threshold, m))

    def count_members_below(self, m: int) -> int:
        if m <= self.threshold:
            return sum(1 for x in self.flips if x < m)
        return len(self.flips) + (m - self.threshold)

    def count_nonmembers_from(self, m: int) -> int:
        """Number of non-members n with n >= m (finite for every m)."""
        if m >= self.threshold:
            return 0
        return (self.threshold - m) - sum(1 for x in self.flips if x >= m)

    # -- set algebra ---------------------------------------------------

    def symmetric_difference(self, other: "SideAssignment") -> FrozenSet[int]:
        """Exact, finite symmetric difference of the two subsets."""
        lo = min(self.threshold, other.threshold)
        hi = max(self.threshold, other.threshold)
        out = set()
        for n in set(self.flips) | set(other.flips) | set(range(lo, hi)):
            if (n in self) != (n in other):
                out.add(n)
        return frozenset(out)

    def hamming(self, other: "SideAssignment") -> int:
        return len(self.symmetric_difference(other))

    def issubset(self, other: "SideAssignment") -> bool:
        lo = min(self.threshold, other.threshold)
        hi = max(self.threshold, other.threshold)
        for n in set(self.flips) | set(other.flips) | set(range(lo, hi)):
            if n in self and n not in other:
                return False
        return True

    # -- transforms ----------------------------------------------------

    def shift(self, k: int) -> "SideAssignment":
        return SideAssignment(self.threshold + k, frozenset(x + k for x in self.flips))

    def toggle(self, slots: Iterable[int]) -> "SideAssignment":
        """Flip the membership of each given slot."""
        flips = set(self.flips)
        for n in slots:
            flips ^= {n}
        return SideAssignment(self.threshold, frozenset(flips))

    def bitmask_below(self, lo: int, hi: int) -> int:
        """Members in [lo, hi) packed into a bitmask (bit i <-> lo + i).

        Only faithful for comparisons between assignments whose thresholds
        are <= hi, which callers must guarantee.
        """
        mask = 0
        for i, n in enumerate(range(lo, hi)):
            if n in self:
                mask |= 1 << i
        return mask


def _normalize(threshold: int, flips: FrozenSet[int]):
    members = {n for n in flips if n < threshold}
    holes = {n for n in flips if n >= threshold}
    if holes:
        t = max(holes) + 1
        members |= set(range(threshold, t)) - holes
    else:
        t = threshold
    while (t - 1) in members:
        members.discard(t - 1)
        t -= 1
    return t, frozenset(members)


def threshold_set(k: int) -> SideAssignment:
    """The pure threshold set {n : n >= k}."""
    return SideAssignment(k, frozenset())
