"""Exact arithmetic on finite sets of non-negative integers.

Sets are stored as sorted, disjoint, maximal closed integer intervals.
Two consecutive intervals always have a gap of at least 2, so every set
has exactly one canonical representation.  All operations are pure and
return canonical sets.

The raw representation is a tuple of (lo, hi) pairs.  Internal helpers
with a ``_raw`` suffix work directly on those tuples; hot loops elsewhere
in the package use them to avoid rewrapping at every step.
"""

from __future__ import annotations

from bisect import bisect_right
from heapq import merge as _heapq_merge
from typing import Iterable, Iterator

Pair = tuple[int, int]
Pairs = tuple[Pair, ...]


def _merge_sorted(pairs: Iterable[Pair]) -> list[Pair]:
    # pairs must arrive sorted by lo; merges overlapping and adjacent runs
    out: list[Pair] = []
    for lo, hi in pairs:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _canon_raw(raw: Iterable[Pair]) -> Pairs:
    pairs = sorted(raw)
    for lo, hi in pairs:
        if lo > hi:
            raise ValueError(f"interval ({lo},{hi}) has lo > hi")
        if lo < 0:
            raise ValueError(f"interval ({lo},{hi}) has a negative endpoint")
    return tuple(_merge_sorted(pairs))


def _union_raw(a: Pairs, b: Pairs) -> Pairs:
    if not a:
        return b
    if not b:
        return a
    return tuple(_merge_sorted(_heapq_merge(a, b)))


def _mink_raw(a: Pairs, b: Pairs) -> Pairs:
    if not a or not b:
        return ()
    if len(b) == 1:
        blo, bhi = b[0]
        return tuple(_merge_sorted((lo + blo, hi + bhi) for lo, hi in a))
    # each shifted copy of a is already sorted; k-way merge keeps the
    # pre-merge stream sorted without an O(k log k) global sort
    runs = ([(lo + blo, hi + bhi) for lo, hi in a] for blo, bhi in b)
    return tuple(_merge_sorted(_heapq_merge(*runs)))


def _shift_raw(a: Pairs, k: int) -> Pairs:
    return tuple((lo + k, hi + k) for lo, hi in a)


def _diff_raw(a: Pairs, b: Pairs) -> Pairs:
    # set difference a \ b; both canonical
    if not a or not b:
        return a
    out: list[Pair] = []
    j = 0
    nb = len(b)
    for lo, hi in a:
        cur = lo
        while j < nb and b[j][1] < cur:
            j += 1
        k = j
        while k < nb and b[k][0] <= hi:
            blo, bhi = b[k]
            if blo > cur:
                out.append((cur, blo - 1))
            if bhi >= cur:
                cur = bhi + 1
            if cur > hi:
                break
            k += 1
        if cur <= hi:
            out.append((cur, hi))
    return tuple(out)


def _subset_raw(a: Pairs, b: Pairs) -> bool:
    j = 0
    nb = len(b)
    for lo, hi in a:
        while j < nb and b[j][1] < lo:
            j += 1
        if j == nb or b[j][0] > lo or b[j][1] < hi:
            return False
    return True


class IntervalSet:
    """Canonical finite set of non-negative integers.

    ``intervals`` is a tuple of (lo, hi) pairs, sorted, with lo <= hi and
    next.lo >= prev.hi + 2.  The constructor accepts arbitrary valid pairs
    and canonicalizes them; pairs with lo > hi or negative endpoints are
    rejected.
    """

    __slots__ = ("intervals",)

    intervals: Pairs

    def __init__(self, intervals: Iterable[Pair] = ()) -> None:
        object.__setattr__(self, "intervals", _canon_raw(intervals))

    @classmethod
    def _wrap(cls, canonical: Pairs) -> "IntervalSet":
        # trusted fast path for already-canonical tuples
        obj = object.__new__(cls)
        object.__setattr__(obj, "intervals", canonical)
        return obj

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntervalSet is immutable")

    def __reduce__(self):
        # slots + blocked __setattr__ need an explicit pickle path
        return (_unpickle_intervalset, (self.intervals,))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntervalSet):
            return self.intervals == other.intervals
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.intervals)

    def __repr__(self) -> str:
        return f"IntervalSet({list(self.intervals)!r})"

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __contains__(self, x: int) -> bool:
        i = bisect_right(self.intervals, (x, float("inf"))) - 1
        return i >= 0 and self.intervals[i][1] >= x

    def __iter__(self) -> Iterator[int]:
        for lo, hi in self.intervals:
            yield from range(lo, hi + 1)

    def point_count(self) -> int:
        """Number of integers in the set."""
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    def min(self) -> int:
        if not self.intervals:
            raise ValueError("empty set has no minimum")
        return self.intervals[0][0]

    def max(self) -> int:
        if not self.intervals:
            raise ValueError("empty set has no maximum")
        return self.intervals[-1][1]


def _unpickle_intervalset(canonical: Pairs) -> IntervalSet:
    return IntervalSet._wrap(canonical)


def canonicalize(raw: Iterable[Pair]) -> IntervalSet:
    """Canonical form (sorted, merged, disjoint) of arbitrary (lo, hi) pairs."""
    return IntervalSet(raw)


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Canonical representation of the set union."""
    return IntervalSet._wrap(_union_raw(a.intervals, b.intervals))


def minkowski_sum(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Canonical form of {x + y | x in a, y in b}; empty if either is empty."""
    return IntervalSet._wrap(_mink_raw(a.intervals, b.intervals))


def is_subset(a: IntervalSet, b: IntervalSet) -> bool:
    """True iff every point of a lies in b."""
    return _subset_raw(a.intervals, b.intervals)


def shift(a: IntervalSet, k: int) -> IntervalSet:
    """Translate every point by k (k >= -min(a) so the result stays non-negative)."""
    if a.intervals and a.intervals[0][0] + k < 0:
        raise ValueError("shift would produce negative points")
    return IntervalSet._wrap(_shift_raw(a.intervals, k))


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Set difference a \\ b."""
    return IntervalSet._wrap(_diff_raw(a.intervals, b.intervals))


def interval_chain_union(a: int, b: int, c: int, m: int, n: int) -> IntervalSet:
    """Union of the arithmetic chain of intervals [i*a + c, i*b + c] for i = m..n.

    Requires 0 < a < b, m <= n, and m*a + c >= 0.  The result collapses to
    the single interval [m*a + c, n*b + c] as soon as m >= ceil((a-1)/(b-a)),
    because from that index on consecutive intervals overlap or touch.
    """
    if not (0 < a < b):
        raise ValueError("requires 0 < a < b")
    if m > n:
        raise ValueError("requires m <= n")
    if m < 0 or m * a + c < 0:
        raise ValueError("chain must stay within non-negative integers")
    return IntervalSet._wrap(
        tuple(_merge_sorted((i * a + c, i * b + c) for i in range(m, n + 1)))
    )
