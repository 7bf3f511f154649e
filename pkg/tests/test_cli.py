import csv
import io
import json
import subprocess
import sys

import pytest

from golden import TABLE_AREA, TABLE_HP
from parapoly.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_series_examples():
    code, out, _ = run("series", "R2", "perimeter", "6")
    assert code == 0
    assert out.splitlines()[-1] == "t^6: q^9+2q^8+q^7+2q^6+4q^5"
    assert run("series", "Asym", "perimeter", "5")[1] == "t^5: 4q^5+4q^4\n"
    assert run("series", "D12", "perimeter", "4")[1].splitlines()[-1] == "t^4: q^4"


def test_series_flags_and_modes():
    a = run("series", "Orbits", "--measure", "perimeter", "--order", "5")[1]
    b = run("series", "orbits", "perimeter", "5")[1]
    assert a == b and a.splitlines()[-1] == "t^5: q^6+q^5+3q^4"
    code, out, _ = run("series", "P", "area", "3")
    assert code == 0 and out == "q^1: t^2\nq^2: 2t^3\nq^3: 4t^4\n"
    code, out, _ = run("series", "LeftFactors", "perimeter", "5")
    assert out.splitlines()[-2:] == ["t^4: 6", "t^5: 10"]
    code, out, _ = run("series", "Ln", "--base", "2", "perimeter", "2")
    assert out == "t^1: q^2\nt^2: q^5+q^4\n"


def test_table_csv_matches_golden():
    code, out, _ = run("table", "--measure", "halfperimeter", "--max", "20")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["Size", "Fix1", "FixR2", "FixD1", "FixD2", "Orbits", "FixD2grp", "Asym"]
    got = {int(r[0]): tuple(map(int, r[1:])) for r in rows[1:]}
    assert got == TABLE_HP


def test_table_positional_form_and_json():
    code, out, _ = run("table", "area", "max=23", "source=genfun", "--format", "json")
    assert code == 0
    data = json.loads(out)
    got = {r["Size"]: tuple(r[c] for c in data["columns"][1:]) for r in data["rows"]}
    assert got == TABLE_AREA


def test_table_both_agrees():
    code, _, err = run("table", "area", "max=12", "source=both")
    assert code == 0 and "agree" in err


def test_table_both_reports_mismatch(monkeypatch):
    from parapoly import cli, tables

    def broken(measure, n, jobs=1):
        t = tables.oracle_table(measure, n, jobs)
        t.rows[n] = (0,) + t.rows[n][1:]
        return t

    monkeypatch.setattr(cli, "oracle_table", broken)
    code, _, err = run("table", "halfperimeter", "max=6", "source=both")
    assert code == 1 and "size 6 Fix1" in err


def test_outputs_are_byte_stable():
    for fmt in ("csv", "json", "pretty"):
        a = run("table", "--measure", "area", "--max", "10", "--format", fmt)[1]
        b = run("table", "--measure", "area", "--max", "10", "--format", fmt)[1]
        assert a == b


def test_exit_codes():
    assert run("table", "--max", "10", "--trunc-t", "5")[0] == 3
    assert run("series", "P", "perimeter", "6", "--trunc-q", "3")[0] == 3
    assert run("table", "--bogus")[0] == 2
    assert run("table", "--source", "magic")[0] == 2
    assert run("table", "halfperimeter", "max=30", "source=oracle")[0] == 2
    assert run("series", "Nope")[0] == 2
    assert run("verify", "--suite", "nope")[0] == 2
    assert run()[0] == 2


def test_verify_json_report():
    code, out, err = run("verify", "--suite", "mobius", "--max", "7")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert {c["name"] for c in report["checks"]} >= {"mobius_pointwise_area", "asym_nonnegative"}
    assert "PASS" in err


def test_verify_bijection_small():
    code, out, _ = run("verify", "--suite", "bijection", "--max", "8")
    assert code == 0 and json.loads(out)["passed"]


def test_show():
    code, out, _ = run("show", "a=2,2;b=2")
    assert code == 0 and "symmetry=FULL" in out and "r2_to_d2=a=2,2;b=2" in out
    assert run("show", "a=2,1;b=2")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "parapoly", "series", "D12", "perimeter", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.endswith("t^4: q^4\n")


@pytest.mark.parametrize("target", ["P", "R2", "R2_even", "R2_odd", "D1", "D2", "D12",
                                    "Orbits", "Asym", "Dyck", "Ln"])
def test_all_targets_run(target):
    for mode in ("perimeter", "area"):
        code, out, _ = run("series", target, mode, "6")
        assert code == 0 and out
