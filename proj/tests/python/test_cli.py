import json
import os
import subprocess

import pytest

BIN = os.environ.get("EVIL_DET_BIN")

pytestmark = pytest.mark.skipif(not BIN, reason="EVIL_DET_BIN not set")


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def test_usage_error_exits_2():
    assert run().returncode == 2
    assert run("verify").returncode == 2
    assert run("verify", "--prime", "5", "--range", "30").returncode == 2


def test_verify_single_prime_json():
    r = run("verify", "--prime", "13", "--format", "json")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert len(data) == 1
    assert data[0]["p"] == 13
    assert data[0]["det_bareiss"] == "-18"
    assert data[0]["status"] == "PASS"


def test_verify_range_csv():
    r = run("verify", "--range", "30", "--class", "1mod4", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().split("\n")
    assert lines[0].startswith("p,residue_class_mod8,det_bareiss")
    assert len(lines) == 5  # header + 5, 13, 17, 29
    assert lines[1].startswith("5,5,-2,-2,")


def test_verify_full_depth():
    r = run("verify", "--prime", "5", "--depth", "full", "--format", "json")
    assert r.returncode == 0
    rec = json.loads(r.stdout)[0]
    assert rec["checks"]["decomposition"] == "pass"
    assert rec["checks"]["detW_threeway"] == "pass"


def test_sequence():
    r = run("sequence", "--range", "17", "--format", "csv")
    assert r.returncode == 0
    assert r.stdout == "p,det\n5,-2\n13,-18\n17,-4\n"


def test_out_file(tmp_path):
    out = tmp_path / "result.json"
    r = run("verify", "--prime", "17", "--format", "json", "--out", str(out))
    assert r.returncode == 0
    assert json.loads(out.read_text())[0]["det_modular"] == "-4"


def test_workers_byte_identical():
    a = run("verify", "--range", "60", "--format", "json", "--workers", "1")
    b = run("verify", "--range", "60", "--format", "json", "--workers", "4")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_bench_runs():
    r = run("bench", "--prime", "13")
    assert r.returncode == 0
    assert "bareiss_ms" in r.stdout
