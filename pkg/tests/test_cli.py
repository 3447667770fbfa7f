"""Command surface: parsing, outputs, exit codes, file artifacts."""

import json
import subprocess
import sys

import pytest

from bachflow.cli import main
from bachflow.solitons import SolitonCertificate


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "catalog")
    assert code == 0
    assert len(out.strip().splitlines()) == 14
    assert "r_x_su2" in out
    code, out, _ = run_cli(capsys, "catalog", "--json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 14
    assert entries[10]["tag"] == "r_x_su2"
    assert entries[10]["split"] == "1x3"
    assert entries[10]["structure"]["kind"] == "group"
    assert "[e1,e2] = e3" in entries[10]["structure"]["brackets"]
    assert entries[0]["structure"] == {"kind": "flat", "name": "r4"}
    code, out, _ = run_cli(capsys, "catalog", "-v")
    assert code == 0
    assert "brackets: [e1,e2] = e3; [e1,e3] = -e2; [e2,e3] = e1" in out
    assert "surface scalar curvature at unit scale: -1" in out


def test_bach_both_routes(capsys):
    code, out, _ = run_cli(capsys, "bach", "-g", "r_x_su2", "-m", "1,4,4,1",
                           "--exact", "--route", "both")
    assert code == 0
    assert "routes agree: True" in out
    assert "-3/512" in out


def test_bach_json_exact_fractions(capsys):
    code, out, _ = run_cli(capsys, "bach", "-g", "r_x_nil", "-m", "1,1,1,1",
                           "--exact", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["routes"]["curvature"]["components"] == ["-1/6", "-5/6", "1/2", "1/2"]


def test_verify_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "verify", "-g", "r_x_su2", "-m", "1,4,4,1",
                           "--exact", "--json")
    assert code == 0
    doc = json.loads(out)
    cert = SolitonCertificate.from_json_dict(doc)
    assert cert.to_json_dict() == doc
    assert cert.verdict == "expanding"
    assert str(cert.c) == "-1/1024"


def test_verify_text_output(capsys):
    code, out, _ = run_cli(capsys, "verify", "-g", "r2_x_s2", "-m", "1,1,1,1",
                           "--exact")
    assert code == 0
    assert "verdict    shrinking" in out
    assert "1/24" in out


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "bach", "-g", "nope", "-m", "1,1,1,1")
    assert code == 2
    assert "unknown geometry tag" in err
    code, _, err = run_cli(capsys, "bach", "-g", "r_x_su2", "-m", "1,-1,1,1")
    assert code == 2
    assert "positive" in err
    code, _, err = run_cli(capsys, "bach", "-g", "r_x_su2", "-m", "1,x,1,1")
    assert code == 2
    code, _, err = run_cli(capsys, "bach", "-g", "r_x_su2", "-m", "1.5,1,1,1",
                           "--exact")
    assert code == 2
    code, _, err = run_cli(capsys, "bach", "-g", "r_x_su2", "-m", "1,2,3")
    assert code == 2


def test_float_mode_accepts_decimals(capsys):
    code, out, _ = run_cli(capsys, "bach", "-g", "r_x_su2", "-m", "1.0,4.0,4.0,1.0")
    assert code == 0
    assert "[float]" in out


def test_classify_single_and_all(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "classify", "-g", "r_x_solv", "--no-scan")
    assert code == 0
    assert "solitons: none" in out
    assert "difference_13_positive" in out
    monkeypatch.setenv("BACHFLOW_THREADS", "2")
    code, out, _ = run_cli(capsys, "classify", "--no-scan", "--json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 14
    assert all(e["certified"] for e in entries)


def test_flow_writes_artifacts(capsys, tmp_path):
    csvp = tmp_path / "flow.csv"
    jsonp = tmp_path / "flow.json"
    code, out, _ = run_cli(capsys, "flow", "-g", "r_x_su2", "-m", "1,4,4,1",
                           "--t-max", "64", "--compare-c=-1/1024",
                           "--csv", str(csvp), "--json-out", str(jsonp))
    assert code == 0
    assert "self-similarity max relative error" in out
    assert "status completed" in out
    assert csvp.exists() and jsonp.exists()
    doc = json.loads(jsonp.read_text())
    assert doc["status"] == "completed"
    header = csvp.read_text().splitlines()[0]
    assert header == "t,g00,g11,g22,g33,trace_residual"


def test_flow_plot(capsys, tmp_path):
    png = tmp_path / "flow.png"
    code, out, _ = run_cli(capsys, "flow", "-g", "r_x_su2", "-m", "1,4,4,1",
                           "--t-max", "16", "--method", "rk4", "--steps", "16",
                           "--plot", str(png))
    assert code == 0
    assert png.exists() and png.stat().st_size > 5000


def test_flow_collapse_reported(capsys):
    code, out, _ = run_cli(capsys, "flow", "-g", "r2_x_s2", "-m", "1,1,1,1",
                           "--t-max", "8")
    assert code == 0
    assert "stopped early at t*" in out


def test_table1_exit_code_and_json(capsys):
    code, out, _ = run_cli(capsys, "table1", "--no-scan")
    assert code == 0
    assert out.count(" OK") == 14
    code, out, _ = run_cli(capsys, "table1", "--no-scan", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_table1_stdout_is_byte_stable(capsys):
    _, a, _ = run_cli(capsys, "table1", "--no-scan")
    _, b, _ = run_cli(capsys, "table1", "--no-scan")
    assert a == b


def test_table1_out_dir(capsys, tmp_path):
    out_dir = tmp_path / "report"
    code, _, err = run_cli(capsys, "table1", "--no-scan", "--no-figures",
                           "--out-dir", str(out_dir))
    assert code == 0
    assert (out_dir / "table1.csv").exists()
    assert (out_dir / "table1.json").exists()
    assert "table1.csv" in err


def test_console_script_help():
    proc = subprocess.run([sys.executable, "-m", "bachflow.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    for name in ("catalog", "bach", "classify", "verify", "flow", "table1"):
        assert name in proc.stdout
