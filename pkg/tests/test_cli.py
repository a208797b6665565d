import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from riordan_circulant import RiordanArray, build, parse_poly
from riordan_circulant.cli import cli


def run(*args):
    return CliRunner().invoke(cli, list(args))


def test_array_table_matches_golden():
    res = run("array", "--poly", "1,5", "--rows", "7", "--cols", "7")
    assert res.exit_code == 0
    last = res.output.strip().splitlines()[-1].split()
    assert last == ["1", "5", "26", "140", "151", "25", "1"]


def test_array_json_round_trip():
    res = run("--format", "json", "array", "--poly", "-1/3,2/3,2/3", "--rows", "10", "--cols", "6")
    assert res.exit_code == 0
    arr = RiordanArray.from_json(res.output)
    assert arr == build(parse_poly("-1/3,2/3,2/3"), 10, 6)
    assert arr.to_json() + "\n" == res.output
    assert json.loads(res.output)["entries"][9][5] == "130/243"


def test_array_csv_rationals():
    res = run("array", "--poly", "1/2,-1/2", "--rows", "7", "--cols", "7", "--format", "csv")
    assert res.output.splitlines()[-1] == "6,1,-1/2,1/2,-1/2,7/16,-5/32,1/64"


def test_out_file(tmp_path):
    out = tmp_path / "a.csv"
    res = run("--format", "csv", "--out", str(out), "array", "--poly", "1,5", "--rows", "3", "--cols", "3")
    assert res.exit_code == 0 and res.output == ""
    assert out.read_text().splitlines()[0] == "i,k0,k1,k2"


def test_column_report():
    res = run("--format", "json", "column", "--poly", "1,5", "--k", "3")
    obj = json.loads(res.output)
    assert obj["report"]["start"] == 5 and obj["report"]["block"] == ["76", "140"]


def test_orbit_exact_csv():
    res = run("--format", "csv", "orbit", "--poly", "1,5", "--nmax", "2")
    assert res.output.splitlines() == ["n,x,y", "0,1,5", "1,10,26", "2,76,140"]


def test_orbit_rotated_curve_json():
    res = run("--format", "json", "orbit", "--poly", "-4/11,6/11", "--rotated", "--curve", "--nmax", "10", "--samples", "50")
    assert res.exit_code == 0
    obj = json.loads(res.output)
    assert len(obj["orbit"]) == 11 and len(obj["curve"]) == 50
    assert set(obj["curve"][0]) == {"t", "x", "y", "branch"}


def test_orbit_quadratic_curve_csv():
    res = run("--format", "csv", "orbit", "--poly", "93/100,1/2,-19/50", "--curve", "--nmax", "4", "--samples", "5")
    blocks = res.output.strip().split("\n\n")
    assert blocks[0].splitlines()[0] == "n,x,y,z"
    assert blocks[1].splitlines()[0] == "t,x,y,z,branch"
    assert len(blocks[1].splitlines()) == 1 + 2 * 5


def test_classify():
    res = run("--format", "json", "classify", "--poly", "93/100,1/2,-19/50")
    obj = json.loads(res.output)
    assert obj["zscale"] == "21/20" and obj["spirals"] == 2
    assert abs(obj["r"] - 1.15659) < 2e-4
    res = run("--format", "json", "classify", "--poly", "1/2,1/2")
    assert json.loads(res.output)["kind"] == "FixedPoint"


def test_az():
    res = run("--format", "json", "az", "--poly", "1,1", "--order", "6")
    assert json.loads(res.output)["A"] == ["1", "1", "-1", "2", "-5", "14"]
    res = run("--format", "json", "az", "--poly", "7", "--order", "3")
    obj = json.loads(res.output)
    assert obj["A"] == ["7", "0", "0"] and obj["Z"] == ["1", "0", "0"]


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--poly", "-1/3,2/3,2/3", "prop5", "--nmax", "3"],
        ["verify", "--poly", "1,1", "theorem6", "--nmax", "8"],
        ["verify", "--poly", "1,5", "theorem1", "--k", "5"],
        ["verify", "--poly", "1,2,3", "theorem2", "--nmax", "4"],
        ["verify", "--poly", "1/2,-1/2", "rogers", "--rows", "7"],
        ["verify", "--poly", "2,3", "catalan"],
        ["verify", "--poly", "1,2,3,4", "diagonalization"],
    ],
)
def test_verify_passes(args):
    res = run("--format", "json", *args)
    assert res.exit_code == 0, res.output
    assert json.loads(res.output)["passed"] is True


def test_oeis_match():
    res = run("oeis", "--id", "A001700", "--from", "theorem6", "--a", "1", "--b", "1", "--nmax", "5")
    assert res.exit_code == 0 and res.output.startswith("match A001700")
    res = run("oeis", "--id", "A002740", "--from", "theorem6-c2", "--nmax", "6")
    assert res.exit_code == 0


@pytest.mark.parametrize(
    "args,code",
    [
        (["verify", "--poly", "0,1", "theorem1"], 2),
        (["orbit", "--poly", "0.93,0.5,-0.38", "--nmax", "3"], 2),
        (["orbit", "--poly", "1,1,1,1", "--rotated"], 2),
        (["classify", "--poly", "1,2,3,4"], 2),
        (["verify", "theorem1"], 2),
        (["verify", "--poly", "1,5", "prop5"], 2),
        (["verify", "--poly", "2/3,-1/3,2/3", "prop5", "--nmax", "1"], 1),
        (["verify", "--poly", "1,2", "diagonalization", "--tol", "1e-30"], 1),
        (["oeis", "--id", "A000108", "--terms", "1,1,2,6"], 1),
        (["oeis", "--id", "A000045", "--terms", "0,1,1,2"], 3),
        (["oeis", "--id", "A000108", "--from", "theorem6", "--a", "2", "--b", "1"], 2),
    ],
)
def test_exit_codes(args, code):
    assert run(*args).exit_code == code


def test_violation_prints_report():
    res = run("verify", "--poly", "2/3,-1/3,2/3", "prop5", "--nmax", "1")
    first = res.output[: res.output.index("}\n") + 1] if "}\n" in res.output else res.output
    assert '"passed": false' in first


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "riordan_circulant", "orbit", "--poly", "1,5", "--nmax", "2", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "2,76,140"
