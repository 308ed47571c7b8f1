"""Reduction number of the irrelevant ideal with respect to Q = (x^d, y^d).

Everything happens on exponent sets.  E_n is the set of alpha such that
x^alpha y^(nd-alpha) lies in the degree-n graded piece, i.e. the n-fold
Minkowski sum of the curve's exponent set.  Q-multiplication adds {0, d},
so the reduction number is the first level n at which

    E_{n+1} = E_n + {0, d}.

Stabilization is guaranteed at or before |M| * (d - 1), with |M| the number
of exponents; failing that bound means a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import MonomialCurve
from .intset import IntervalSet, Pairs, _mink_raw, _shift_raw, _union_raw


@dataclass(frozen=True)
class LevelRecord:
    """One graded level: n, the set E_n, and whether E_{n+1} = E_n + {0,d}."""

    n: int
    exponents: IntervalSet
    stabilized: bool


@dataclass(frozen=True)
class ReductionTrace:
    """Levels E_0 .. E_{r_q} with stabilization flags, plus r_q itself."""

    d: int
    levels: tuple[LevelRecord, ...]
    r_q: int


def _trace_raw(d: int, m_pairs: Pairs, bound: int) -> tuple[list[Pairs], int]:
    # returns ([E_0 .. E_{r_q}], r_q); raises if nothing stabilizes in bound
    levels: list[Pairs] = []
    e: Pairs = ((0, 0),)
    for n in range(bound + 1):
        levels.append(e)
        e_next = _mink_raw(e, m_pairs)
        if e_next == _union_raw(e, _shift_raw(e, d)):
            return levels, n
        e = e_next
    raise RuntimeError(
        f"no stabilization up to the termination bound {bound}; "
        "this indicates an implementation bug"
    )


def exponent_set(curve: MonomialCurve, n: int) -> IntervalSet:
    """E_n: the n-fold Minkowski sum of the exponent set (E_0 = {0})."""
    if n < 0:
        raise ValueError("level must be non-negative")
    m_pairs = curve.exponents.intervals
    e: Pairs = ((0, 0),)
    for _ in range(n):
        e = _mink_raw(e, m_pairs)
    return IntervalSet._wrap(e)


def reduction_trace(curve: MonomialCurve) -> ReductionTrace:
    """Iterate levels until E_{n+1} = E_n + {0, d} and record the journey."""
    bound = curve.point_count() * (curve.d - 1)
    levels_raw, r_q = _trace_raw(curve.d, curve.exponents.intervals, bound)
    records = tuple(
        LevelRecord(n, IntervalSet._wrap(e), n == r_q)
        for n, e in enumerate(levels_raw)
    )
    return ReductionTrace(curve.d, records, r_q)


def reduction_number(curve: MonomialCurve) -> int:
    """Least n with E_{n+1} = E_n + {0, d}."""
    return reduction_trace(curve).r_q


def exponent_levels(curve: MonomialCurve, n_top: int) -> tuple[IntervalSet, ...]:
    """E_0 .. E_{n_top}, each computed by honest incremental Minkowski sums."""
    m_pairs = curve.exponents.intervals
    levels = [((0, 0),)]
    e: Pairs = levels[0]
    for _ in range(n_top):
        e = _mink_raw(e, m_pairs)
        levels.append(e)
    return tuple(IntervalSet._wrap(e) for e in levels)
