"""Monomial curve model and shape classification.

A curve is given by a degree d and the set of exponents alpha such that
the degree-d monomial x^alpha y^(d-alpha) is present.  Both pure powers
x^d and y^d must be present, so 0 and d always belong to the exponent set.

Exponent sets fall into a small family of shapes, named by the layout of
their maximal intervals (singleton ends versus wide ends); each shape with
a known closed-form answer gets its own label, everything else is General.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .intset import IntervalSet, Pair


class CaseKind(str, enum.Enum):
    TWO_GENERATORS = "TwoGenerators"
    A = "A"
    B_POINT = "B_point"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    GENERAL = "General"


@dataclass(frozen=True)
class MonomialCurve:
    """Degree d plus the canonical exponent set (a subset of [0, d])."""

    d: int
    exponents: IntervalSet

    def point_count(self) -> int:
        return self.exponents.point_count()


@dataclass(frozen=True)
class CaseLabel:
    """Shape classification of a curve.

    mirrored means the label describes the reflected curve (alpha -> d-alpha);
    parameters then refer to the reflected exponent set, which is the
    orientation the closed-form formulas expect.
    """

    kind: CaseKind
    mirrored: bool = False
    parameters: dict[str, int] = field(default_factory=dict)


def make_curve(d: int, raw_exponents: list[Pair]) -> MonomialCurve:
    """Validate and canonicalize a curve description.

    Rejects d < 1, exponents outside [0, d], and sets missing 0 or d.
    """
    if not isinstance(d, int) or d < 1:
        raise ValueError("degree must be an integer >= 1")
    exps = IntervalSet(raw_exponents)
    if not exps.intervals:
        raise ValueError("exponent set must not be empty")
    if exps.max() > d:
        raise ValueError(f"exponents must lie in [0, {d}]")
    if exps.min() != 0:
        raise ValueError("exponent 0 (the monomial y^d) must be present")
    if exps.max() != d:
        raise ValueError(f"exponent {d} (the monomial x^d) must be present")
    return MonomialCurve(d, exps)


def mirror(curve: MonomialCurve) -> MonomialCurve:
    """The curve with exponent set {d - alpha}; swapping x and y. An involution."""
    d = curve.d
    refl = tuple((d - hi, d - lo) for lo, hi in reversed(curve.exponents.intervals))
    return MonomialCurve(d, IntervalSet._wrap(refl))


def classify(curve: MonomialCurve) -> CaseLabel:
    """Assign the unique shape label, trying the un-mirrored orientation first.

    Shapes by canonical interval layout (s = singleton end, w = end with
    at least two points):

    - 2 points total            -> TwoGenerators
    - two intervals (s, w)      -> A        {0} with [a, d]
    - two intervals (w, s)      -> A mirrored
    - two intervals (w, w)      -> C        [0, a] with [b, d]
    - three intervals (s, s, s) -> B_point  {0, a, d}
    - three intervals (s, *, s) -> B        {0} with [a, b] and {d}
    - three intervals (s, *, w) -> D        {0} with [a, b] and [c, d]
    - three intervals (w, *, s) -> D mirrored
    - three intervals (w, *, w) -> E        [0, a] with [b, c] and [e, d]
    - anything else             -> General
    """
    ivs = curve.exponents.intervals
    d = curve.d
    if curve.point_count() == 2:
        return CaseLabel(CaseKind.TWO_GENERATORS)
    k = len(ivs)
    if k == 2:
        (lo0, hi0), (lo1, hi1) = ivs
        left_single = hi0 == 0
        right_single = lo1 == d
        if left_single:
            return CaseLabel(CaseKind.A, parameters={"a": lo1})
        if right_single:
            return CaseLabel(CaseKind.A, mirrored=True, parameters={"a": d - hi0})
        return CaseLabel(CaseKind.C, parameters={"a": hi0, "b": lo1})
    if k == 3:
        (lo0, hi0), (lo1, hi1), (lo2, hi2) = ivs
        left_single = hi0 == 0
        right_single = lo2 == d
        if left_single and right_single:
            if lo1 == hi1:
                return CaseLabel(CaseKind.B_POINT, parameters={"a": lo1})
            return CaseLabel(CaseKind.B, parameters={"a": lo1, "b": hi1})
        if left_single:
            return CaseLabel(CaseKind.D, parameters={"a": lo1, "b": hi1, "c": lo2})
        if right_single:
            return CaseLabel(
                CaseKind.D,
                mirrored=True,
                parameters={"a": d - hi1, "b": d - lo1, "c": d - hi0},
            )
        return CaseLabel(
            CaseKind.E, parameters={"a": hi0, "b": lo1, "c": hi1, "e": lo2}
        )
    return CaseLabel(CaseKind.GENERAL)


def parse_set_text(text: str) -> list[Pair]:
    """Parse the CLI exponent-set grammar: comma-separated "lo-hi" or "v" tokens."""
    pairs: list[Pair] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError("empty token in exponent set text")
        lo_s, sep, hi_s = token.partition("-")
        try:
            lo = int(lo_s)
            hi = int(hi_s) if sep else lo
        except ValueError:
            raise ValueError(f"malformed token {token!r}; expected N or N-N") from None
        if lo > hi:
            raise ValueError(f"token {token!r} has lo > hi")
        pairs.append((lo, hi))
    return pairs


def format_set_text(exponents: IntervalSet) -> str:
    """Inverse of parse_set_text for canonical sets."""
    return ",".join(
        str(lo) if lo == hi else f"{lo}-{hi}" for lo, hi in exponents.intervals
    )
