"""Command-line front end: per-curve reports, exhaustive sweeps, invariant
verification, and the two open-question campaigns.

Sweep output is deterministic: rows are ordered by (d, set text) no matter
how many worker processes computed them, and every row's checks are
recomputed by an independent validator pass before the summary is emitted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence, TextIO

from .curve import (
    CaseKind,
    MonomialCurve,
    classify,
    format_set_text,
    make_curve,
    mirror,
    parse_set_text,
)
from .formulas import (
    case_b_conjecture_value,
    case_c_is_buchsbaum,
    closed_form,
)
from .intset import IntervalSet, Pairs, is_subset, shift, union
from .reduction import exponent_levels, reduction_number, reduction_trace
from .regularity import resolution_summary

CSV_COLUMNS = [
    "d",
    "set",
    "case",
    "mirrored",
    "rq_oracle",
    "formula_value",
    "formula_source",
    "formula_asserts_regularity",
    "conjecture_value",
    "reg",
    "c0",
    "c1",
    "num_generators",
    "num_syzygies",
    "rank",
    "is_cm",
    "buchsbaum_case_c",
    "check_c0_equals_rq",
    "check_reg_ge_rq",
    "check_formula_matches",
    "check_conjecture_matches",
]

_CASE_TOKENS = {
    "A": CaseKind.A,
    "Bpoint": CaseKind.B_POINT,
    "B": CaseKind.B,
    "C": CaseKind.C,
    "D": CaseKind.D,
    "E": CaseKind.E,
    "General": CaseKind.GENERAL,
    "TwoGenerators": CaseKind.TWO_GENERATORS,
}


@dataclass
class CurveReport:
    """Everything computed for one curve; the unit of CLI output."""

    d: int
    set: str
    case: str
    mirrored: bool
    rq_oracle: int
    formula_value: int | None
    formula_source: str | None
    formula_asserts_regularity: bool | None
    conjecture_value: int | None
    reg: int
    c0: int
    c1: int | None
    num_generators: int
    num_syzygies: int
    rank: int
    is_cm: bool
    buchsbaum_case_c: bool | None
    checks: dict


def build_report(curve: MonomialCurve) -> CurveReport:
    """Compute oracle, resolution, formula, and agreement checks for a curve."""
    label = classify(curve)
    trace = reduction_trace(curve)
    rq = trace.r_q
    summary = resolution_summary(curve, trace=trace)
    formula = closed_form(curve)

    conjecture = None
    if label.kind is CaseKind.B:
        conjecture = case_b_conjecture_value(
            curve.d, label.parameters["a"], label.parameters["b"]
        ).value
    buchsbaum = None
    if label.kind is CaseKind.C:
        buchsbaum = case_c_is_buchsbaum(
            curve.d, label.parameters["a"], label.parameters["b"]
        )

    checks = {
        "c0_equals_rq": summary.c0 == rq,
        "reg_ge_rq": summary.reg >= rq,
        "formula_matches": None if formula is None else formula.value == rq,
        "conjecture_matches": None if conjecture is None else conjecture == rq,
    }
    return CurveReport(
        d=curve.d,
        set=format_set_text(curve.exponents),
        case=label.kind.value,
        mirrored=label.mirrored,
        rq_oracle=rq,
        formula_value=None if formula is None else formula.value,
        formula_source=None if formula is None else formula.source,
        formula_asserts_regularity=(
            None if formula is None else formula.asserts_regularity
        ),
        conjecture_value=conjecture,
        reg=summary.reg,
        c0=summary.c0,
        c1=summary.c1,
        num_generators=len(summary.generator_degrees),
        num_syzygies=len(summary.syzygy_degrees),
        rank=summary.rank,
        is_cm=summary.is_cm,
        buchsbaum_case_c=buchsbaum,
        checks=checks,
    )


# ---------------------------------------------------------------------------
# Curve enumeration


def enumerate_exponent_sets(d: int, max_intervals: int = 3) -> Iterator[Pairs]:
    """All canonical interval tuples of degree-d curves with at most
    max_intervals maximal intervals: 0 = a0 <= a1 < a2 <= ... <= a_{2m+1} = d
    with gaps >= 2 between intervals."""

    def extend(prefix: Pairs, lo: int) -> Iterator[Pairs]:
        for hi in range(lo, d + 1):
            cur = prefix + ((lo, hi),)
            if hi == d:
                yield cur
            elif len(cur) < max_intervals:
                for next_lo in range(hi + 2, d + 1):
                    yield from extend(cur, next_lo)

    return extend((), 0)


def enumerate_curves(
    min_degree: int,
    max_degree: int,
    max_intervals: int = 3,
    cases: frozenset[CaseKind] | None = None,
) -> Iterator[MonomialCurve]:
    """Curves in deterministic sweep order: d ascending, then set text."""
    for d in range(min_degree, max_degree + 1):
        batch = []
        for pairs in enumerate_exponent_sets(d, max_intervals):
            curve = MonomialCurve(d, IntervalSet._wrap(pairs))
            if cases is not None and classify(curve).kind not in cases:
                continue
            batch.append((format_set_text(curve.exponents), curve))
        batch.sort(key=lambda item: item[0])
        for _, curve in batch:
            yield curve


# ---------------------------------------------------------------------------
# Sweep engine


@dataclass
class SweepConfig:
    max_degree: int
    min_degree: int = 2
    max_intervals: int = 3
    cases: frozenset[CaseKind] | None = None
    jobs: int = 1


def _report_worker(args: tuple[int, Pairs]) -> CurveReport:
    d, pairs = args
    return build_report(MonomialCurve(d, IntervalSet._wrap(pairs)))


def generate_reports(config: SweepConfig) -> Iterator[CurveReport]:
    curves = enumerate_curves(
        config.min_degree, config.max_degree, config.max_intervals, config.cases
    )
    if config.jobs <= 1:
        for curve in curves:
            yield build_report(curve)
        return
    args = ((curve.d, curve.exponents.intervals) for curve in curves)
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        # map preserves input order, so parallel output stays deterministic
        yield from pool.map(_report_worker, args, chunksize=256)


def validate_reports(reports: Sequence[CurveReport]) -> list[str]:
    """Independent re-derivation of every row's checks from its own fields.

    Returns human-readable descriptions of any inconsistency: stored checks
    that disagree with the fields, rank identity failures, or Buchsbaum flags
    that contradict the reduction number.
    """
    problems: list[str] = []
    for r in reports:
        expected = {
            "c0_equals_rq": r.c0 == r.rq_oracle,
            "reg_ge_rq": r.reg >= r.rq_oracle,
            "formula_matches": (
                None if r.formula_value is None else r.formula_value == r.rq_oracle
            ),
            "conjecture_matches": (
                None
                if r.conjecture_value is None
                else r.conjecture_value == r.rq_oracle
            ),
        }
        where = f"d={r.d} set={r.set}"
        if r.checks != expected:
            problems.append(f"{where}: stored checks {r.checks} != {expected}")
        if r.num_generators - r.num_syzygies != r.rank:
            problems.append(
                f"{where}: generator/syzygy counts do not match rank "
                f"({r.num_generators} - {r.num_syzygies} != {r.rank})"
            )
        if r.buchsbaum_case_c is not None and r.buchsbaum_case_c != (
            r.rq_oracle == 2
        ):
            problems.append(
                f"{where}: Buchsbaum flag {r.buchsbaum_case_c} but "
                f"rq={r.rq_oracle}"
            )
    return problems


def summarize_reports(
    reports: Sequence[CurveReport], validator_problems: Sequence[str]
) -> dict:
    by_case: dict[str, int] = {}
    cm_by_case: dict[str, int] = {}
    formula_rows = 0
    value_mismatches = 0
    reg_assert_failures = 0
    conjecture_rows = 0
    conjecture_agreements = 0
    reg_gt_rq: list[dict] = []
    invariant_violations = 0
    buchsbaum_violations = 0
    bound_violations = 0
    for r in reports:
        by_case[r.case] = by_case.get(r.case, 0) + 1
        if r.is_cm:
            cm_by_case[r.case] = cm_by_case.get(r.case, 0) + 1
        if r.formula_value is not None:
            formula_rows += 1
            if r.formula_value != r.rq_oracle:
                value_mismatches += 1
            if r.formula_asserts_regularity and r.reg != r.formula_value:
                reg_assert_failures += 1
        if r.conjecture_value is not None:
            conjecture_rows += 1
            if r.conjecture_value == r.rq_oracle:
                conjecture_agreements += 1
        if r.reg > r.rq_oracle:
            reg_gt_rq.append(
                {"d": r.d, "set": r.set, "rq": r.rq_oracle, "reg": r.reg}
            )
        if r.c0 != r.rq_oracle or r.reg < r.rq_oracle:
            invariant_violations += 1
        if r.num_generators - r.num_syzygies != r.rank:
            invariant_violations += 1
        if r.buchsbaum_case_c is not None and r.buchsbaum_case_c != (
            r.rq_oracle == 2
        ):
            buchsbaum_violations += 1
        # diagnostic only: the classical degree bound reg <= d - |M| + 2
        num_points = sum(hi - lo + 1 for lo, hi in parse_set_text(r.set))
        if r.reg > r.d - num_points + 2:
            bound_violations += 1
    return {
        "type": "summary",
        "curves": len(reports),
        "by_case": dict(sorted(by_case.items())),
        "cm_counts_by_case": dict(sorted(cm_by_case.items())),
        "formula_rows": formula_rows,
        "formula_value_mismatches": value_mismatches,
        "regularity_assertion_failures": reg_assert_failures,
        "conjecture_rows": conjecture_rows,
        "conjecture_agreements": conjecture_agreements,
        "conjecture_disagreements": conjecture_rows - conjecture_agreements,
        "reg_gt_rq_count": len(reg_gt_rq),
        "reg_gt_rq_examples": reg_gt_rq[:25],
        "buchsbaum_equivalence_violations": buchsbaum_violations,
        "invariant_violations": invariant_violations,
        "validator_problems": list(validator_problems),
        "reg_bound_diagnostic": {
            "bound": "reg <= d - |M| + 2",
            "violations": bound_violations,
        },
    }


def _report_to_flat(r: CurveReport) -> dict:
    row = asdict(r)
    checks = row.pop("checks")
    for key, value in checks.items():
        row[f"check_{key}"] = value
    return row


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def write_reports(
    reports: Sequence[CurveReport], summary: dict, out: TextIO, fmt: str
) -> None:
    if fmt == "json":
        for r in reports:
            out.write(json.dumps(asdict(r)) + "\n")
        out.write(json.dumps(summary) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            flat = _report_to_flat(r)
            writer.writerow(_csv_cell(flat[col]) for col in CSV_COLUMNS)


def run_sweep(config: SweepConfig, out: TextIO, fmt: str = "json") -> int:
    """Full sweep: rows, validator pass, summary. Returns the exit code."""
    reports = list(generate_reports(config))
    problems = validate_reports(reports)
    summary = summarize_reports(reports, problems)
    write_reports(reports, summary, out, fmt)
    print(json.dumps(summary), file=sys.stderr)
    failed = (
        summary["formula_value_mismatches"]
        or summary["regularity_assertion_failures"]
        or summary["buchsbaum_equivalence_violations"]
        or summary["invariant_violations"]
        or problems
    )
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# Invariant verification


def verify_curve(curve: MonomialCurve) -> str | None:
    """Run every structural invariant on one curve; None or a failure label."""
    trace = reduction_trace(curve)
    rq = trace.r_q
    n_top = 2 * rq + 4
    levels = exponent_levels(curve, n_top)
    d = curve.d
    for n in range(n_top):
        step = union(levels[n], shift(levels[n], d))
        if not is_subset(step, levels[n + 1]):
            return f"containment failed at level {n}"
        stabilized = step == levels[n + 1]
        if stabilized and n < rq:
            return f"stabilized at level {n} before r_q={rq}"
        if not stabilized and n >= rq:
            return f"persistence failed at level {n} (r_q={rq})"

    summary = resolution_summary(curve, trace=trace)
    if summary.c0 != rq:
        return f"c0={summary.c0} != r_q={rq}"
    if summary.reg < rq:
        return f"reg={summary.reg} < r_q={rq}"
    if len(summary.generator_degrees) - len(summary.syzygy_degrees) != summary.rank:
        return "generator/syzygy counts do not match rank"
    wider = resolution_summary(curve, truncation=n_top, trace=trace)
    if wider != summary:
        return "resolution changed when the truncation window grew"

    mirrored = mirror(curve)
    if reduction_number(mirrored) != rq:
        return "mirror changed the reduction number"
    mirror_summary = resolution_summary(mirrored)
    if (mirror_summary.generator_degrees, mirror_summary.syzygy_degrees) != (
        summary.generator_degrees,
        summary.syzygy_degrees,
    ):
        return "mirror changed the resolution degrees"
    return None


def run_verify(
    max_degree: int, min_degree: int = 2, max_intervals: int = 3
) -> tuple[int, str | None]:
    """Verify all curves in range; returns (curves checked, first failure)."""
    checked = 0
    for curve in enumerate_curves(min_degree, max_degree, max_intervals):
        failure = verify_curve(curve)
        checked += 1
        if failure is not None:
            return checked, f"d={curve.d} set={format_set_text(curve.exponents)}: {failure}"
    return checked, None


# ---------------------------------------------------------------------------
# Open-question campaigns


def conjecture_campaign(max_degree: int, min_r: int = 3) -> list[dict]:
    """Three-interval middle shapes where only the conjectured value exists.

    Covers {0} u [a,b] u {d} with extrapolation index r = ceil((a-1)/(b-a))
    at least min_r, comparing the conjectured value against the oracle.
    """
    rows: list[dict] = []
    for d in range(4, max_degree + 1):
        for a in range(2, d - 1):
            for b in range(a + 1, d - 1):
                result = case_b_conjecture_value(d, a, b)
                r = -((a - 1) // -(b - a))
                if r < min_r:
                    continue
                curve = make_curve(d, [(0, 0), (a, b), (d, d)])
                rq = reduction_number(curve)
                rows.append(
                    {
                        "d": d,
                        "a": a,
                        "b": b,
                        "r": r,
                        "conjecture": result.value,
                        "rq_oracle": rq,
                        "agrees": result.value == rq,
                    }
                )
    return rows


def regularity_gap_campaign(max_degree: int) -> tuple[int, list[dict]]:
    """Hunt for reg != r_Q over the four-term-maximum Case E range.

    Returns (curves checked, rows where reg differs from the oracle r_Q).
    """
    checked = 0
    gaps: list[dict] = []
    for d in range(5, max_degree + 1):
        for a in range(1, d - 2):
            for b in range(a + 1, d - 1):
                for c in range(b, min(2 * b - 1, (a + d) // 2, d - 2) + 1):
                    for e in range(c + 1, min(2 * b, d - 1) + 1):
                        checked += 1
                        curve = make_curve(d, [(0, a), (b, c), (e, d)])
                        trace = reduction_trace(curve)
                        summary = resolution_summary(curve, trace=trace)
                        if summary.reg != trace.r_q:
                            gaps.append(
                                {
                                    "d": d,
                                    "a": a,
                                    "b": b,
                                    "c": c,
                                    "e": e,
                                    "rq": trace.r_q,
                                    "reg": summary.reg,
                                }
                            )
    return checked, gaps


# ---------------------------------------------------------------------------
# Entry points


def _parse_cases(text: str, parser: argparse.ArgumentParser) -> frozenset[CaseKind]:
    kinds = []
    for token in text.split(","):
        token = token.strip()
        if token not in _CASE_TOKENS:
            parser.error(
                f"unknown case {token!r}; choose from {', '.join(_CASE_TOKENS)}"
            )
        kinds.append(_CASE_TOKENS[token])
    return frozenset(kinds)


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        pairs = parse_set_text(args.set)
        curve = make_curve(args.degree, pairs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = build_report(curve)
    if args.format == "json":
        print(json.dumps(asdict(report), indent=2))
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        flat = _report_to_flat(report)
        writer.writerow(_csv_cell(flat[col]) for col in CSV_COLUMNS)
        sys.stdout.write(out.getvalue())
    bad = [k for k, v in report.checks.items() if v is False]
    return 1 if bad else 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        max_degree=args.max_degree,
        max_intervals=args.max_intervals,
        cases=args.cases,
        jobs=args.jobs,
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as out:
            return run_sweep(config, out, args.format)
    return run_sweep(config, sys.stdout, args.format)


def cmd_verify(args: argparse.Namespace) -> int:
    checked, failure = run_verify(args.max_degree)
    if failure is not None:
        print(f"FAIL after {checked} curves: {failure}", file=sys.stderr)
        return 1
    print(f"OK: {checked} curves verified", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redreg",
        description=(
            "Reduction numbers and regularity of projective monomial curves "
            "in two variables"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="report on a single curve")
    p_compute.add_argument("--degree", type=int, required=True)
    p_compute.add_argument(
        "--set",
        required=True,
        help='exponent set, e.g. "0,2,6,7" or "0,4-9" (comma-separated v or lo-hi)',
    )
    p_compute.add_argument("--format", choices=["json", "csv"], default="json")
    p_compute.set_defaults(func=cmd_compute)

    p_sweep = sub.add_parser("sweep", help="exhaustive validation sweep")
    p_sweep.add_argument("--max-degree", type=int, required=True)
    p_sweep.add_argument(
        "--cases",
        type=str,
        default=None,
        help="comma list of case labels (A,Bpoint,B,C,D,E,General,TwoGenerators)",
    )
    p_sweep.add_argument("--max-intervals", type=int, default=3)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--out", type=str, default=None)
    p_sweep.add_argument("--format", choices=["json", "csv"], default="json")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = sub.add_parser("verify", help="run the structural invariant suite")
    p_verify.add_argument("--max-degree", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_degree", None) is not None and args.max_degree < 2:
        parser.error("--max-degree must be at least 2")
    if getattr(args, "cases", None) is not None and isinstance(args.cases, str):
        args.cases = _parse_cases(args.cases, parser)
    if getattr(args, "max_intervals", None) is not None and args.max_intervals < 1:
        parser.error("--max-intervals must be at least 1")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    return args.func(args)
