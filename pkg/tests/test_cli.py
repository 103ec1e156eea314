import csv
import io
import json
import shutil
import subprocess
import sys

import pytest

from cyclebound.cli import CENSUS_COLUMNS, main


@pytest.fixture
def k4(tmp_path):
    path = tmp_path / "k4.txt"
    assert main(["construct", "--family", "k4-chain", "--size", "2", "--out", str(path)]) == 0
    return path


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_k4(k4):
    lines = k4.read_text().splitlines()
    assert lines[0] == "4 6" and len(lines) == 7


def test_construct_tripled_cycle(capsys):
    code, out, _ = run(["construct", "--family", "tripled-cycle", "--size", "3"], capsys)
    assert code == 0
    assert out.splitlines() == ["3 3 multi", "0 1 3", "0 2 3", "1 2 3"]


def test_construct_invalid_size(capsys):
    code, _, err = run(["construct", "--family", "tripled-cycle", "--size", "2"], capsys)
    assert code == 4 and "L >= 3" in err
    assert run(["construct", "--family", "nope", "--size", "3"], capsys)[0] == 4


def test_construct_circulant_offsets(capsys):
    code, out, _ = run(["construct", "--family", "circulant", "--size", "9", "--offsets", "1,3"], capsys)
    assert code == 0 and out.splitlines()[0] == "9 18"


def test_bound_triangle(tmp_path, capsys):
    path = tmp_path / "tri.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(["bound", "--graph", str(path), "--source", "0"], capsys)
    assert code == 0
    assert out.strip() == "q_0 = [2, 2] (exactly 2)"


def test_bound_k4_and_prime(k4, capsys):
    code, out, _ = run(["bound", "--graph", str(k4), "--source", "0", "--prec", "64"], capsys)
    assert code == 0 and out.startswith("q_0 = [6.2914")
    code, out, _ = run(["bound", "--graph", str(k4), "--source", "0", "--prime"], capsys)
    assert code == 0 and out.startswith("q'_0")


def test_bound_errors(tmp_path, k4, capsys):
    assert run(["bound", "--graph", str(tmp_path / "missing"), "--source", "0"], capsys)[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    code, _, err = run(["bound", "--graph", str(bad), "--source", "0"], capsys)
    assert code == 2 and "line 2" in err
    assert run(["bound", "--graph", str(k4), "--source", "9"], capsys)[0] == 3


def test_count(tmp_path, k4, capsys):
    assert run(["count", "--graph", str(k4), "--cycles"], capsys)[1].strip() == "7"
    assert run(["count", "--graph", str(k4), "--paths", "2", "2"], capsys)[1].strip() == "1"
    ear = tmp_path / "ear.txt"
    main(["construct", "--family", "ear-path", "--size", "3", "--out", str(ear)])
    assert run(["count", "--graph", str(ear), "--paths", "0", "3"], capsys)[1].strip() == "8"
    assert run(["count", "--graph", str(k4), "--paths", "0", "4"], capsys)[0] == 3


def _csv(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_census_k4_ring_growth(capsys, tmp_path):
    out_path = tmp_path / "ring.csv"
    code, _, _ = run(["census", "--family", "k4-ring", "--sizes", "3..8", "--out", str(out_path)], capsys)
    assert code == 0
    text = out_path.read_text()
    rows = _csv(text)
    assert list(rows[0].keys()) == list(CENSUS_COLUMNS)
    assert [int(r["cycles"]) for r in rows][:3] == [197, 804, 3315]
    assert abs(float(rows[-1]["growth_rate"]) - 0.31498) < 0.02
    assert all(r["certified"] == "yes" for r in rows)
    for r in rows:
        assert int(r["cycles"]) <= float(r["bound_avgdeg"]) and int(r["cycles"]) <= float(r["bound_bregman"])
        assert r["gamma_d_vs_kappa1"].startswith("above")
    run(["census", "--family", "k4-ring", "--sizes", "3..8", "--out", str(tmp_path / "again.csv")], capsys)
    assert (tmp_path / "again.csv").read_text() == text


def test_census_ear_path_and_multi(capsys):
    code, out, _ = run(["census", "--family", "ear-path", "--sizes", "1..5"], capsys)
    assert code == 0
    assert [int(r["paths"]) for r in _csv(out)] == [2, 4, 8, 16, 32]
    code, out, _ = run(["census", "--family", "tripled-cycle", "--sizes", "3..4"], capsys)
    rows = _csv(out)
    assert code == 0 and rows[0]["bound_multi"] and not rows[0]["bound_avgdeg"]


def test_census_errors(capsys):
    assert run(["census", "--family", "k4-ring", "--sizes", "3..9"], capsys)[0] == 6
    assert run(["census", "--family", "k4-ring", "--sizes", "x"], capsys)[0] == 4
    assert run(["census", "--family", "k4-ring", "--sizes", "2..4"], capsys)[0] == 4


def test_verify_lcases_report(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(["verify", "--suite", "lcases", "--report", str(path)], capsys)
    assert code == 0 and "survivor-set" in out
    doc = json.loads(path.read_text())
    assert doc["outcome"] == "CERTIFIED" and "elapsed_s" not in doc


def test_verify_low_precision_exit_5(capsys):
    assert run(["verify", "--suite", "constants", "--prec", "8"], capsys)[0] == 5


def test_verify_report_write_error(tmp_path, capsys):
    target = tmp_path / "missing-dir" / "r.json"
    assert run(["verify", "--suite", "constants", "--report", str(target)], capsys)[0] == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("cyclebound") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["cyclebound", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "cyclebound" in out.stdout


def test_module_entry():
    out = subprocess.run([sys.executable, "-m", "cyclebound.cli", "construct", "--family", "k4-chain", "--size", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("4 6")
