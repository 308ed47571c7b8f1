"""Reduction numbers and regularity of projective monomial curves.

Curves are cut out by a set of degree-d monomials in x and y; everything
is computed exactly from the lattice combinatorics of the exponent sets.
"""

from .curve import (
    CaseKind,
    CaseLabel,
    MonomialCurve,
    classify,
    format_set_text,
    make_curve,
    mirror,
    parse_set_text,
)
from .formulas import (
    FormulaResult,
    case_a_value,
    case_b_conjecture_value,
    case_b_point_value,
    case_b_value,
    case_c_is_buchsbaum,
    case_c_value,
    case_d_value,
    case_e_hhs_value,
    case_e_value,
    closed_form,
)
from .intset import (
    IntervalSet,
    canonicalize,
    difference,
    interval_chain_union,
    is_subset,
    minkowski_sum,
    shift,
    union,
)
from .reduction import (
    LevelRecord,
    ReductionTrace,
    exponent_levels,
    exponent_set,
    reduction_number,
    reduction_trace,
)
from .regularity import (
    ResolutionSummary,
    StaircaseClass,
    achieved_residues,
    is_cohen_macaulay,
    resolution_summary,
    staircase_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "CaseKind",
    "CaseLabel",
    "FormulaResult",
    "IntervalSet",
    "LevelRecord",
    "MonomialCurve",
    "ReductionTrace",
    "ResolutionSummary",
    "StaircaseClass",
    "achieved_residues",
    "canonicalize",
    "case_a_value",
    "case_b_conjecture_value",
    "case_b_point_value",
    "case_b_value",
    "case_c_is_buchsbaum",
    "case_c_value",
    "case_d_value",
    "case_e_hhs_value",
    "case_e_value",
    "classify",
    "closed_form",
    "difference",
    "exponent_levels",
    "exponent_set",
    "format_set_text",
    "interval_chain_union",
    "is_cohen_macaulay",
    "is_subset",
    "make_curve",
    "minkowski_sum",
    "mirror",
    "parse_set_text",
    "reduction_number",
    "reduction_trace",
    "resolution_summary",
    "shift",
    "staircase_decompose",
    "union",
]
