import csv
import io
import json
import subprocess
import sys

import pytest

from hilbertkunz.cli import PROFILE_KEYS, Report, main

CAYLEY = "x*y*z + x*y*w + x*z*w + y*z*w"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(out):
    return json.loads(out)["rows"]


def test_compute_elliptic(capsys):
    code, out, _ = run(capsys, "compute", "--prime", "5", "--vars", "x,y,z",
                       "--poly", "y^2*z - x^3 - x*z^2", "--q", "5")
    assert code == 0
    (row,) = rows(out)
    assert row["hk"] == 55 and row["a"] == 7 and row["maximal_rank"] is True


def test_compute_cayley(capsys):
    code, out, _ = run(capsys, "compute", "--prime", "3", "--vars", "x,y,z,w",
                       "--poly", CAYLEY, "--q", "1,2,3")
    assert code == 0
    assert [r["hk"] for r in rows(out)] == [1, 14, 51]


def test_compute_rows_sorted_and_keys_stable(capsys):
    code, out, _ = run(capsys, "compute", "--prime", "5", "--vars", "x,y,z",
                       "--poly", "z*y^2 - x^3", "--q", "5,2,3", "--family", "cuspidal")
    assert code == 0
    data = rows(out)
    assert [r["q"] for r in data] == [2, 3, 5]
    for r in data:
        assert set(PROFILE_KEYS) <= set(r)
        assert r["match"] is True
    assert [r["frobenius_power"] for r in data] == [False, False, True]


def test_compute_without_family_keeps_keys(capsys):
    _, out, _ = run(capsys, "compute", "--prime", "3", "--vars", "x,y,z", "--poly", "x^2 - y*z", "--q", "3")
    (row,) = rows(out)
    assert set(PROFILE_KEYS) <= set(row) and row["formula"] is None and row["match"] is None


@pytest.mark.parametrize("argv", [
    ["compute", "--prime", "5", "--vars", "x,y,z", "--poly", "x^", "--q", "5"],
    ["compute", "--prime", "5", "--vars", "x,y,z", "--poly", "x^2", "--q", "a,b"],
    ["nonsense"],
    ["verify", "--family", "quartic", "--prime", "5"],
    [],
])
def test_parse_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "elliptic_odd", "--prime", "2"],
    ["compute", "--prime", "4", "--vars", "x,y", "--poly", "x*y", "--q", "2"],
    ["compute", "--prime", "5", "--vars", "x,y,z", "--poly", "x^2 + y", "--q", "2"],
    ["compute", "--prime", "5", "--vars", "x,y,z", "--poly", "x^2", "--q", "0"],
    ["verify", "--family", "nodal", "--prime", "5", "--q", "6"],
    ["hankel", "--kmax", "3", "--prime", "2"],
    ["bound", "--n", "0", "--d", "3", "--q", "4"],
])
def test_precondition_errors_exit_3(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 3 and out == "" and err.startswith("error:")


def test_verify_cayley(capsys):
    code, out, _ = run(capsys, "verify", "--family", "cayley", "--prime", "5", "--qmax", "8")
    assert code == 0
    data = rows(out)
    assert len(data) == 8 and all(r["match"] for r in data)


def test_verify_nodal(capsys):
    code, out, _ = run(capsys, "verify", "--family", "nodal", "--prime", "7", "--qmax", "49")
    assert code == 0
    assert [(r["q"], r["hk"], r["match"]) for r in rows(out)] == [(7, 111, True), (49, 5585, True)]


def test_verify_mismatch_exit_4(capsys):
    code, out, _ = run(capsys, "verify", "--family", "elliptic_char2_jnz", "--prime", "2", "--qmax", "4")
    assert code == 4
    assert [r["match"] for r in rows(out)] == [False, True]


def test_beta(capsys):
    code, out, _ = run(capsys, "beta", "--nmax", "6")
    assert code == 0
    assert [r["beta"] for r in rows(out)] == ["1", "1", "3/4", "2/3", "115/192", "11/20"]


def test_hankel(capsys):
    code, out, _ = run(capsys, "hankel", "--kmax", "10", "--prime", "7")
    assert code == 0
    data = rows(out)
    assert len(data) == 10 and all(r["geronimus"] and r["corollary"] for r in data)


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--n", "2", "--d", "3", "--q", "4")
    assert code == 0
    (row,) = rows(out)
    assert (row["m"], row["L"], row["limit_gap"]) == (5, 34, "1/8")


def test_csv_format(capsys):
    code, out, _ = run(capsys, "--format", "csv", "compute", "--prime", "3", "--vars", "x,y,z,w",
                       "--poly", CAYLEY, "--q", "1,2", "--family", "cayley")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("q,hk,a,iota,m,L,maximal_rank,formula,match")
    parsed = list(csv.DictReader(io.StringIO(out)))
    assert [r["hk"] for r in parsed] == ["1", "14"]
    assert parsed[1]["maximal_rank"] == "true" and parsed[1]["match"] == "true"


def test_csv_rationals(capsys):
    _, out, _ = run(capsys, "beta", "--nmax", "3", "--format", "csv")
    assert out.splitlines() == ["index,beta", "1,1", "2,1", "3,3/4"]


def _strip_timing(text):
    data = json.loads(text)
    data.pop("elapsed_seconds")
    return data, [line for line in text.splitlines() if "elapsed_seconds" not in line]


def test_identical_invocations_are_identical(capsys):
    argv = ["props", "--count", "3", "--seed", "7"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert _strip_timing(first) == _strip_timing(second)
    _, other, _ = run(capsys, "--seed", "8", "props", "--count", "3")
    assert _strip_timing(other)[0]["rows"] != _strip_timing(first)[0]["rows"]


def test_props_suite(capsys):
    code, out, _ = run(capsys, "props", "--count", "5", "--no-brute-force")
    assert code == 0
    assert all(r["ok"] and r["failed"] == [] for r in rows(out))


def test_report_roundtrip():
    report = Report("beta", {"nmax": 2}, [{"index": 1, "beta": "1"}], 0.25)
    again = Report.from_json(report.to_json())
    assert again.to_dict() == report.to_dict()


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hilbertkunz.cli", "bound", "--n", "3", "--d", "2", "--q", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rows"][0]["L"] == 35
