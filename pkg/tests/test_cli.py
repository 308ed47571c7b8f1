"""Report assembly, sweep output formats, exit codes, and campaigns."""

import csv
import io
import json

import pytest

from redreg import cli
from redreg.cli import (
    CSV_COLUMNS,
    SweepConfig,
    build_report,
    conjecture_campaign,
    enumerate_curves,
    enumerate_exponent_sets,
    generate_reports,
    main,
    regularity_gap_campaign,
    run_sweep,
    run_verify,
    validate_reports,
    verify_curve,
)
from redreg.curve import make_curve
from oracles import brute_reduction_number, brute_resolution


def test_build_report_fields():
    r = build_report(make_curve(7, [(0, 0), (2, 2), (6, 7)]))
    assert r.d == 7 and r.set == "0,2,6-7"
    assert r.case == "D" and not r.mirrored
    assert r.rq_oracle == 4 and r.reg == 4
    assert r.formula_value is None and r.formula_source is None
    assert (r.c0, r.c1) == (4, 5)
    assert (r.num_generators, r.num_syzygies, r.rank) == (9, 2, 7)
    assert not r.is_cm and r.buchsbaum_case_c is None
    assert r.checks == {
        "c0_equals_rq": True,
        "reg_ge_rq": True,
        "formula_matches": None,
        "conjecture_matches": None,
    }


def test_build_report_case_specific_fields():
    b = build_report(make_curve(9, [(0, 0), (3, 5), (9, 9)]))
    assert b.case == "B" and b.conjecture_value == 3
    assert b.checks["conjecture_matches"] is True
    c = build_report(make_curve(4, [(0, 1), (3, 4)]))
    assert c.case == "C" and c.buchsbaum_case_c is True
    assert c.rq_oracle == 2 and c.reg == 2 and not c.is_cm
    a = build_report(make_curve(5, [(0, 0), (2, 5)]))
    assert a.case == "A" and a.formula_value == 2 and a.is_cm
    assert a.checks["formula_matches"] is True


def test_enumerate_exponent_sets_counts():
    assert set(enumerate_exponent_sets(2)) == {((0, 2),), ((0, 0), (2, 2))}
    for d in range(1, 11):
        expected = set()
        for mask in range(1 << max(0, d - 1)):
            pts = sorted({0, d} | {i + 1 for i in range(d - 1) if mask >> i & 1})
            c = make_curve(d, [(x, x) for x in pts])
            if len(c.exponents.intervals) <= 3:
                expected.add(c.exponents.intervals)
        got = list(enumerate_exponent_sets(d))
        assert len(got) == len(set(got)) == len(expected)
        assert set(got) == expected


def test_enumerate_curves_order_and_filter():
    curves = list(enumerate_curves(2, 6))
    keys = [(c.d, cli.format_set_text(c.exponents)) for c in curves]
    assert keys == sorted(keys)
    from redreg.curve import CaseKind, classify

    just_c = list(enumerate_curves(2, 8, cases=frozenset({CaseKind.C})))
    assert just_c and all(classify(c).kind is CaseKind.C for c in just_c)


def test_sweep_json_output_and_exit_code():
    buf = io.StringIO()
    code = run_sweep(SweepConfig(max_degree=8), buf, "json")
    assert code == 0
    lines = buf.getvalue().splitlines()
    rows = [json.loads(line) for line in lines]
    summary = rows.pop()
    assert summary["type"] == "summary"
    assert summary["curves"] == len(rows)
    assert summary["formula_value_mismatches"] == 0
    assert summary["invariant_violations"] == 0
    assert summary["validator_problems"] == []
    keys = [(r["d"], r["set"]) for r in rows]
    assert keys == sorted(keys)
    for r in rows:
        assert set(r) == set(CSV_COLUMNS) - {
            c for c in CSV_COLUMNS if c.startswith("check_")
        } | {"checks"}


def test_sweep_csv_output():
    buf = io.StringIO()
    code = run_sweep(SweepConfig(max_degree=6), buf, "csv")
    assert code == 0
    buf.seek(0)
    rows = list(csv.reader(buf))
    assert rows[0] == CSV_COLUMNS
    first = dict(zip(CSV_COLUMNS, rows[1]))
    # set text sorts before interval text: "0,2" < "0-2"
    assert first["d"] == "2" and first["set"] == "0,2"
    assert first["case"] == "TwoGenerators"
    assert first["check_c0_equals_rq"] == "true"
    for raw in rows[1:]:
        assert len(raw) == len(CSV_COLUMNS)
        row = dict(zip(CSV_COLUMNS, raw))
        assert row["is_cm"] in ("true", "false")
        # formula-free rows render None as an empty cell
        if row["formula_value"] == "":
            assert row["formula_source"] == ""
            assert row["check_formula_matches"] == ""


def test_sweep_deterministic_across_jobs():
    serial, parallel = io.StringIO(), io.StringIO()
    assert run_sweep(SweepConfig(max_degree=8), serial, "json") == 0
    assert run_sweep(SweepConfig(max_degree=8, jobs=2), parallel, "json") == 0
    assert serial.getvalue() == parallel.getvalue()


def test_validate_reports_catches_corruption():
    reports = list(generate_reports(SweepConfig(max_degree=5)))
    assert validate_reports(reports) == []
    reports[0].rank += 1
    problems = validate_reports(reports)
    assert problems and "rank" in problems[0]


def test_verify_curve_clean_and_broken(monkeypatch):
    assert verify_curve(make_curve(7, [(0, 0), (2, 2), (6, 7)])) is None
    real = cli.resolution_summary

    def broken(curve, truncation=None, trace=None):
        s = real(curve, truncation=truncation, trace=trace)
        return type(s)(
            generator_degrees=s.generator_degrees,
            syzygy_degrees=s.syzygy_degrees,
            c0=s.c0 + 1,
            c1=s.c1,
            rank=s.rank,
            reg=s.reg,
            is_cm=s.is_cm,
        )

    monkeypatch.setattr(cli, "resolution_summary", broken)
    failure = verify_curve(make_curve(7, [(0, 0), (2, 2), (6, 7)]))
    assert failure is not None and "c0" in failure


def test_run_verify_small():
    checked, failure = run_verify(6)
    assert failure is None
    assert checked == sum(len(list(enumerate_exponent_sets(d))) for d in range(2, 7))


def test_compute_json_exit_codes(capsys):
    assert main(["compute", "--degree", "7", "--set", "0,2,6-7"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["rq_oracle"] == 4 and report["reg"] == 4
    assert report["case"] == "D"

    assert main(["compute", "--degree", "4", "--set", "0-1,3-4"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["buchsbaum_case_c"] is True and report["is_cm"] is False

    assert main(["compute", "--degree", "7", "--set", "0,2,6"]) == 2
    assert "error" in capsys.readouterr().err

    assert main(["compute", "--degree", "7", "--set", "0,x,7"]) == 2
    capsys.readouterr()


def test_compute_csv_format(capsys):
    assert main(["compute", "--degree", "5", "--set", "0,2-5", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == CSV_COLUMNS
    row = dict(zip(CSV_COLUMNS, rows[1]))
    assert row["set"] == "0,2-5"
    assert row["case"] == "A" and row["formula_value"] == "2"
    assert row["conjecture_value"] == "" and row["is_cm"] == "true"


def test_cli_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--max-degree", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--max-degree", "8", "--cases", "Z"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--max-degree", "8", "--jobs", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main([])


def test_sweep_to_file_with_case_filter(tmp_path, capsys):
    out = tmp_path / "rows.jsonl"
    code = main(
        ["sweep", "--max-degree", "8", "--cases", "C", "--out", str(out)]
    )
    assert code == 0
    summary = json.loads(capsys.readouterr().err)
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    trailer = rows.pop()
    assert trailer["type"] == "summary"
    assert rows and all(r["case"] == "C" for r in rows)
    assert summary["curves"] == len(rows)
    assert summary["by_case"] == {"C": len(rows)}


def test_conjecture_campaign_rows():
    rows = conjecture_campaign(16)
    assert rows
    for row in rows:
        assert row["r"] >= 3
        assert set(row) == {"d", "a", "b", "r", "conjecture", "rq_oracle", "agrees"}
        assert row["agrees"] == (row["conjecture"] == row["rq_oracle"])
        pts = {0, row["d"]} | set(range(row["a"], row["b"] + 1))
        assert row["rq_oracle"] == brute_reduction_number(row["d"], pts)


def test_regularity_gap_campaign_counts():
    checked, gaps = regularity_gap_campaign(12)
    expected = 0
    for d in range(5, 13):
        for a in range(1, d):
            for b in range(a + 1, d):
                for c in range(b, d):
                    for e in range(c + 1, d):
                        if e <= 2 * b and 2 * c <= a + d:
                            expected += 1
    assert checked == expected
    for row in gaps:
        o = brute_resolution(
            row["d"],
            set(range(0, row["a"] + 1))
            | set(range(row["b"], row["c"] + 1))
            | set(range(row["e"], row["d"] + 1)),
        )
        assert (o["rq"], o["reg"]) == (row["rq"], row["reg"])
        assert row["reg"] != row["rq"]
