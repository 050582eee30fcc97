import json
import shutil
import subprocess
import sys

import pytest

from fflv.cli import dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_vertices(capsys):
    r = report(capsys, "vertices", "--type", "A", "--weight", "1,1")
    assert r["count"] == 7
    points = [v["point"] for v in r["vertices"]]
    assert {"1,2": "0", "2,3": "0", "1,3": "2"} in points
    assert {"1,2": "1", "2,3": "0", "1,3": "1"} in points
    assert report(capsys, "vertices", "--weight", "1,0")["count"] == 3
    assert report(capsys, "vertices", "--type", "C", "--weight", "1")["count"] == 2


def test_vertices_include_permutation_vertices(capsys):
    verts = report(capsys, "vertices", "--weight", "1,1")["vertices"]
    perm = report(capsys, "perm", "--weight", "1,1")["entries"]
    assert len(perm) == 6
    assert all(e["x"] in [v["point"] for v in verts] for e in perm)


def test_psi_commands(capsys):
    r = report(capsys, "psi-inv", "--perm", "3,1,4,2")
    assert r["segments"] == ["2-3", "1-3", "2-4"]
    r = report(capsys, "psi", "--segments", "1-2,1-3", "--n", "3")
    assert r["w"] == [2, 3, 1] and r["round_trip"]
    r = report(capsys, "psi", "--type", "C", "--n", "1", "--segments", "1-2")
    assert r["w"] == {"sigma": [1], "signs": [-1]}


def test_perm_entries(capsys):
    r = report(capsys, "perm", "--weight", "1,1")
    entry = next(e for e in r["entries"] if e["segments"] == ["1-2", "1-3"])
    assert entry["w"] == [2, 3, 1]
    assert entry["b"] == "2"
    c = report(capsys, "perm", "--type", "C", "--weight", "1,1")
    assert c["count"] == 8
    assert all(set(e["w"]) == {"sigma", "signs"} for e in c["entries"])


def test_simple(capsys):
    r = report(capsys, "simple", "--weight", "1,1,1")
    assert r["count"] == 22 and r["schroder_match"]
    assert all(v["oracle_simple"] for v in r["vertices"])
    assert report(capsys, "simple", "--weight", "1,1")["count"] == 6
    assert report(capsys, "simple", "--weight", "2,3")["count"] == 6
    code, _, err = run(capsys, "simple", "--weight", "1,0")
    assert code == 2 and "regular" in err


def test_char(capsys):
    terms = lambda r: {t["exponent"]: t["coefficient"] for t in r["terms"]}
    assert terms(report(capsys, "char", "--weight", "1,1")) == {"0": 1, "1": 2, "2": 3}
    assert terms(report(capsys, "char", "--weight", "0")) == {"0": 2}
    assert terms(report(capsys, "char", "--weight", "2,3")) == {"0": 1, "2": 1, "3": 1, "5": 3}


def test_lattice_count(capsys):
    assert report(capsys, "lattice-count", "--weight", "1,1")["count"] == 8
    r = report(capsys, "lattice-count", "--type", "C", "--weight", "1,0")
    assert r["count"] == r["weyl_dimension"] == 4


def test_verify(capsys):
    r = report(capsys, "verify", "--type", "A", "--n", "3", "--weights-upto", "2")
    assert r["all_pass"] and r["weights"] == 9
    r = report(capsys, "verify", "--type", "C", "--n", "2", "--weights-upto", "2")
    assert r["all_pass"]
    r = report(capsys, "verify", "--n", "4", "--sample", "3", "--seed", "7")
    assert r["all_pass"] and r["weights"] == 3


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--type", "A", "--n", "8")
    assert code == 3 and "budget" in err
    code, _, _ = run(capsys, "vertices", "--weight", "1,1,1,1", "--max-rank", "3")
    assert code == 3
    code, _, _ = run(capsys, "lattice-count", "--weight", "2,2,2", "--budget", "10")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ["psi-inv", "--perm", "1,1"],
    ["psi-inv", "--perm", "a,b"],
    ["vertices", "--weight", "1,-1"],
    ["vertices"],
    ["psi", "--segments", "1-3,2-4", "--n", "4"],
    ["psi", "--segments", "1-2"],
    ["char", "--type", "C", "--weight", "1"],
    ["vertices", "--max-rank", "0", "--weight", "1"],
])
def test_input_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["vertices", "--weight", "1,2"], ["perm", "--type", "C", "--weight", "1,1"], ["char", "--weight", "1,2"],
    ["simple", "--weight", "1,1,1"], ["verify", "--n", "3", "--weights-upto", "1"],
])
def test_json_round_trip_and_table_counts(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    assert dump_json(json.loads(out)) + "\n" == out
    count = json.loads(out)["count"]
    code, table, _ = run(capsys, *argv, "--format", "table")
    assert code == 0
    assert f"count: {count}" in table.splitlines()


def test_console_script():
    exe = shutil.which("fflv")
    cmd = [exe] if exe else [sys.executable, "-m", "fflv.cli"]
    out = subprocess.run(cmd + ["psi-inv", "--perm", "2,3,1"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["segments"] == ["1-2", "1-3"]
