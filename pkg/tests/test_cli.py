import json
import subprocess
import sys
from pathlib import Path

import pytest

CLI = [sys.executable, "-m", "isotwirl.cli"]


def run_cli(*args):
    return subprocess.run([*CLI, *args], capture_output=True, text=True)


def test_dims_text():
    res = run_cli("dims", "2,1")
    assert res.returncode == 0
    assert res.stdout == "frame=2,1 d=2 dim_sym=2 dim_unitary=2 projector_trace=4\n"
    res = run_cli("dims", "3", "--d", "2")
    assert "dim_sym=1 dim_unitary=4" in res.stdout


def test_dims_json_and_global_flag_positions():
    before = run_cli("--d", "3", "--format", "json", "dims", "2,1")
    after = run_cli("dims", "2,1", "--d", "3", "--format", "json")
    assert before.returncode == after.returncode == 0
    assert before.stdout == after.stdout
    obj = json.loads(after.stdout)
    assert obj["dim_unitary"] == 8 and obj["frame"] == "2,1,0"


def test_dims_errors():
    res = run_cli("dims", "2,1,1")
    assert res.returncode == 2 and "more than 2 rows" in res.stderr
    res = run_cli("dims", "1,2")
    assert res.returncode == 2 and "token 2" in res.stderr
    res = run_cli("dims", "2,x")
    assert res.returncode == 2 and "not an integer" in res.stderr


def test_lr_command():
    res = run_cli("lr", "2", "1", "1")
    assert res.returncode == 0
    assert "coefficient=1" in res.stdout and "agree=True" in res.stdout
    res = run_cli("lr", "2,2", "2", "1,1")
    assert "coefficient=0" in res.stdout
    res = run_cli("lr", "3,1", "2", "1,1", "--witness")
    assert "witness 1:" in res.stdout and ". . 1" in res.stdout
    res = run_cli("lr", "3", "1", "1")
    assert res.returncode == 0 and "size mismatch" in res.stdout and "coefficient=0" in res.stdout


def test_char_command():
    res = run_cli("char", "2,1", "3")
    assert res.returncode == 0 and res.stdout == "character=-1\n"
    res = run_cli("char", "2,1", "1,1,1")
    assert res.stdout == "character=2\n"
    res = run_cli("char", "2,1", "2,2")
    assert res.returncode == 2


def test_horn_command():
    res = run_cli("horn", "2,1", "1", "1,1")
    assert res.returncode == 0 and res.stdout == "basic=True feasible=True\n"
    res = run_cli("horn", "2,2", "2", "1,1", "--basic")
    assert res.stdout == "basic=False\n"
    res = run_cli("horn", "2,2", "2", "1,1", "--feasible")
    assert res.stdout == "feasible=False\n"


def test_spectrum_command(tmp_path: Path):
    res = run_cli("spectrum", "4,0", "--q", "0")
    lines = res.stdout.strip().split("\n")
    assert lines[0] == "frame,weight_numerator,weight_denominator,weight_float"
    assert len(lines) == 2 and lines[1].startswith('"4,0",1,1,')
    res = run_cli("spectrum", "4,0", "--k", "1")
    lines = res.stdout.strip().split("\n")
    assert len(lines) == 3  # support {(4,0), (3,1)}
    # weights sum to one
    total = sum(
        int(line.rsplit(",", 3)[1]) / int(line.rsplit(",", 3)[2]) for line in lines[1:]
    )
    assert abs(total - 1.0) < 1e-15
    out = tmp_path / "table.json"
    res = run_cli("spectrum", "4,0", "--q", "1/2", "--format", "json", "--out", str(out))
    assert res.returncode == 0
    obj = json.loads(out.read_text())
    assert obj["entries"][0]["weight"] == "121/256"


def test_spectrum_errors():
    assert run_cli("spectrum", "4,0").returncode == 2
    assert run_cli("spectrum", "4,0", "--q", "1/2", "--k", "1").returncode == 2
    assert run_cli("spectrum", "4,0", "--q", "3/2").returncode == 2
    assert run_cli("spectrum", "4,0", "--k", "9").returncode == 2


def test_sweep_command():
    res = run_cli("sweep", "4,0", "--grid", "0,1")
    lines = res.stdout.strip().split("\n")
    assert lines[0] == "frame,q=0/1,q=1/1"
    assert lines[1] == '"4,0",1.0,0.3125'
    res_exact = run_cli("sweep", "4,0", "--grid", "0,1", "--exact")
    assert '"4,0",1/1,5/16' in res_exact.stdout
    assert run_cli("sweep", "4,0", "--grid", "").returncode == 2


def test_xy_command():
    res = run_cli("xy", "4,0", "3,1", "2", "2")
    assert res.returncode == 0 and res.stdout.startswith("X=1 Y=1")
    res = run_cli("xy", "4,0", "2,2", "3", "1", "--format", "json")
    obj = json.loads(res.stdout)
    assert obj["x_max"] == 0 and obj["argmax"] is None
    assert run_cli("xy", "4,0", "3,1", "1", "1").returncode == 2


def test_verify_small_suite(tmp_path: Path):
    out = tmp_path / "report.json"
    res = run_cli("verify", "xybound", "--cap-n", "4", "--out", str(out))
    assert res.returncode == 0
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert report["suite"] == "xybound"
    assert all(c["passed"] for c in report["checks"])
    assert "[PASS]" in res.stderr


def test_verify_unknown_suite():
    res = run_cli("verify", "bogus")
    assert res.returncode == 2 and "unknown suite" in res.stderr


def test_verify_failure_exit_code(monkeypatch, capsys):
    import isotwirl.cli as cli
    from isotwirl.verify import CheckResult, RunConfig, SuiteReport

    failing = SuiteReport(
        "stub", RunConfig(), [CheckResult("broken", False, 1, ["example failure"])]
    )
    monkeypatch.setattr(cli, "run_suite", lambda name, cfg: failing)
    assert cli.main(["verify", "stub"]) == 1
    captured = capsys.readouterr()
    assert "[FAIL] broken" in captured.err
    assert '"passed": false' in captured.out


def test_verify_deterministic(tmp_path: Path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        res = run_cli("verify", "saturation", "--cap-n", "4", "--out", str(path))
        assert res.returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_output_files_byte_identical(tmp_path: Path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run_cli("sweep", "6,0", "--grid", "0.1,0.5,0.9", "--out", str(path)).returncode == 0
    assert a.read_bytes() == b.read_bytes()
