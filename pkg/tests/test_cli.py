"""Command-line interface: grammar, formats, exit codes, cross-checks."""

import csv
import io
import json

import pytest

from discrim.cli import build_parser, main
from discrim.discriminator import table_ranges
from discrim.numtheory import artin_constant
from discrim.verify import SUITES, run_suites


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


# ------------------------------------------------------------------ discriminate


def test_discriminate_default_cross_checks(capsys):
    code, out, err = run_cli(capsys, "discriminate", "--n", "20", "--format", "csv")
    assert code == 0 and not err
    (row,) = parse_csv(out)
    assert row == {"n": "20", "value": "25", "method": "verified_both"}


def test_discriminate_closed_only(capsys):
    code, out, _ = run_cli(
        capsys, "discriminate", "--n", "2049", "--method", "closed", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"n": 2049, "value": 3125, "method": "closed_form"}


def test_discriminate_generic_sequence(capsys):
    code, out, _ = run_cli(
        capsys, "discriminate", "--seq", "linrec:1,1,1,2", "--n", "6", "--format", "csv"
    )
    assert code == 0
    (row,) = parse_csv(out)
    assert row["method"] == "brute_force"
    assert int(row["value"]) >= 6


def test_discriminate_rejects_closed_for_generic(capsys):
    code, _, err = run_cli(
        capsys, "discriminate", "--seq", "linrec:1,1,1,2", "--n", "4", "--method", "closed"
    )
    assert code == 2 and "error:" in err


def test_discriminate_constant_sequence_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "discriminate", "--seq", "poly:5", "--n", "3")
    assert code == 2 and "no modulus" in err


def test_discriminate_cap_exhaustion_is_failure(capsys):
    code, _, err = run_cli(
        capsys, "discriminate", "--n", "17", "--method", "brute", "--cap", "24"
    )
    assert code == 1 and "failure:" in err


def test_discriminate_rejects_nonpositive_n(capsys):
    code, _, err = run_cli(capsys, "discriminate", "--n", "0")
    assert code == 2 and "error:" in err


# ------------------------------------------------------------------ table


def test_table_csv_matches_library(capsys):
    code, out, _ = run_cli(capsys, "table", "--max", "100", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert [(int(r["start"]), int(r["end"]), int(r["value"])) for r in rows] == table_ranges(100)


def test_table_json_lines(capsys):
    code, out, _ = run_cli(capsys, "table", "--max", "8", "--format", "json")
    assert code == 0
    objs = [json.loads(line) for line in out.splitlines()]
    assert objs[0] == {"start": 1, "end": 1, "value": 1}
    assert objs[-1] == {"start": 5, "end": 8, "value": 8}


def test_table_human_is_aligned(capsys):
    code, out, _ = run_cli(capsys, "table", "--max", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["start", "end", "value"]
    assert len(lines) == 5


# ------------------------------------------------------------------ period / iota


def test_period_cross_checked(capsys):
    code, out, _ = run_cli(capsys, "period", "--d", "9", "--format", "csv")
    assert code == 0
    (row,) = parse_csv(out)
    assert row == {"modulus": "9", "pre_period": "2", "period": "2", "method": "both"}


def test_period_single_methods(capsys):
    for method, tag in (("formula", "formula"), ("brute", "brute")):
        code, out, _ = run_cli(
            capsys, "period", "--d", "7", "--method", method, "--format", "csv"
        )
        assert code == 0
        (row,) = parse_csv(out)
        assert (row["period"], row["method"]) == ("6", tag)


def test_period_formula_refused_for_generic(capsys):
    code, _, err = run_cli(capsys, "period", "--seq", "linrec:1,1,1,1", "--d", "10")
    assert code == 2 and "error:" in err
    code, out, _ = run_cli(
        capsys, "period", "--seq", "linrec:1,1,1,1", "--d", "10", "--method", "brute",
        "--format", "csv",
    )
    assert code == 0
    (row,) = parse_csv(out)
    assert row["period"] == "60"                 # Pisano period of 10


def test_iota_single_and_range(capsys):
    code, out, _ = run_cli(capsys, "iota", "--m", "29", "--format", "csv")
    assert code == 0
    (row,) = parse_csv(out)
    assert row == {"m": "29", "iota": "14"}

    code, out, _ = run_cli(capsys, "iota", "--range", "1:8", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert [r["m"] for r in rows] == [str(m) for m in range(1, 9)]
    assert rows[6]["iota"] == "2"                # iota(7) = 2


def test_iota_flags_are_mutually_exclusive():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["iota", "--m", "5", "--range", "1:4"])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["iota"])


def test_bad_range_is_usage_error(capsys):
    for bad in ("5", "9:2", "a:b"):
        code, _, err = run_cli(capsys, "iota", "--range", bad)
        assert code == 2 and "error:" in err, bad


# ------------------------------------------------------------------ screen


def test_screen_single_certificate(capsys):
    code, out, _ = run_cli(capsys, "screen", "--d", "15", "--format", "csv")
    assert code == 0
    (row,) = parse_csv(out)
    assert row["verdict"] == "non_value" and row["reason"] == "divisible_by_3"
    assert json.loads(row["witness"]) == {"d_mod_3": 0}


def test_screen_range_verdicts(capsys):
    code, out, _ = run_cli(capsys, "screen", "--range", "2:40", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 39
    by_d = {r["d"]: r for r in rows}
    assert by_d[32]["verdict"] == "undecided"
    assert by_d[13]["reason"] == "period_screen"
    assert by_d[7]["reason"] == "iota_screen"
    for r in rows:
        json.loads(r["witness"])                  # witness is always valid JSON


def test_screen_rejects_d_below_2(capsys):
    code, _, err = run_cli(capsys, "screen", "--d", "1")
    assert code == 2 and "error:" in err


# ------------------------------------------------------------------ census / fset / charsum / artin


def test_census_output(capsys):
    code, out, _ = run_cli(capsys, "census", "--x", "1000", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert [r["class"] for r in rows] == ["P1", "P2", "P3"]
    assert sum(int(r["count"]) for r in rows) <= 168   # pi(1000)
    code, out, _ = run_cli(capsys, "census", "--x", "1000")
    assert "x = 1000, primes classified = 168" in out


def test_fset_both_methods(capsys):
    code, out, _ = run_cli(capsys, "fset", "--max", "10", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    members = [r["member"] == "True" for r in rows]
    assert members == [False, True, True, False, True, True, False, True, True, False]
    assert rows[0]["witness"] == "4"              # [4, 5] contains 2^2
    assert rows[1]["witness"] == ""


def test_fset_weyl_only(capsys):
    code, out, _ = run_cli(capsys, "fset", "--max", "6", "--method", "weyl", "--format", "csv")
    assert code == 0
    rows = parse_csv(out)
    assert [r["member"] for r in rows] == ["False", "True", "True", "False", "True", "True"]


def test_charsum_verdict_ok(capsys):
    code, out, _ = run_cli(capsys, "charsum", "--p", "7", "--format", "csv")
    assert code == 0
    (row,) = parse_csv(out)
    assert row["verdict"] == "ok"
    assert row["setA_size"] == "5"
    assert float(row["max_nontrivial_sum"]) == pytest.approx(7**0.5, abs=1e-6)


def test_charsum_rejects_small_or_composite_p(capsys):
    for bad in ("5", "9"):
        code, _, err = run_cli(capsys, "charsum", "--p", bad)
        assert code == 2 and "error:" in err


def test_artin_value(capsys):
    code, out, _ = run_cli(capsys, "artin", "--prime-limit", "100", "--format", "csv")
    assert code == 0
    (row,) = parse_csv(out)
    assert float(row["artin_partial"]) == pytest.approx(artin_constant(100), abs=1e-12)


# ------------------------------------------------------------------ verify


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "table")
    assert code == 0
    assert out.startswith("[PASS] table:")


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "bogus")
    assert code == 2 and "unknown suite" in err


def test_run_suites_python_api():
    ok, results = run_suites(["table", "note"])
    assert ok and [r.suite for r in results] == ["table", "note"]
    with pytest.raises(ValueError):
        run_suites("never-heard-of-it")
    assert set(SUITES) >= {"table", "theorem1", "periods", "charsum", "note"}


# ------------------------------------------------------------------ output plumbing


def test_output_file_writes_instead_of_stdout(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, out, _ = run_cli(
        capsys, "table", "--max", "8", "--format", "csv", "--output", str(target)
    )
    assert code == 0 and out == ""
    rows = parse_csv(target.read_text())
    assert rows[-1]["value"] == "8"


def test_missing_subcommand_is_parser_error():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
