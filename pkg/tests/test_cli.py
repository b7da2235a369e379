from __future__ import annotations

import json
import subprocess
import sys

import pytest

from stressfree import catalog
from stressfree.certify import Certificate, replay_certificate
from stressfree.cli import main
from stressfree.graph import to_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def k5_file(tmp_path):
    p = tmp_path / "k5.txt"
    p.write_text(to_edge_list(catalog.get("K5")))
    return str(p)


def test_rigidity_text(capsys, k5_file):
    code, out, _ = run(capsys, "rigidity", k5_file, "-d", "3")
    assert code == 0
    assert "stress_dim: 1" in out and "rank: 9" in out


def test_json_schema_and_reproducibility(capsys):
    a = run_json(capsys, "rigidity", "octahedron", "-d", "3", "--seed", "5")
    b = run_json(capsys, "rigidity", "octahedron", "-d", "3", "--seed", "5")
    assert set(a) == {"command", "input", "seeds", "result", "elapsed_s"}
    assert a["command"][0] == "rigidity"
    assert a["input"] == {"digest": catalog.get("octahedron").digest(), "n": 6, "m": 12}
    assert a["seeds"][0] == 5 and len(a["seeds"]) == 3
    assert a["result"] == b["result"]
    assert a["result"]["stress_dim"] == 0 and a["result"]["is_rigid"]


def test_default_seed_is_fixed(capsys):
    a = run_json(capsys, "shift", "W5")
    b = run_json(capsys, "shift", "W5")
    assert a["seeds"] == b["seeds"] and a["result"] == b["result"]


def test_shift(capsys):
    r = run_json(capsys, "shift", "K2,2,2,2,2", "--kind", "symmetric")
    assert [7, 8] in r["result"]["edges"] and r["result"]["chromatic_number"] == 8
    r = run_json(capsys, "shift", "K4", "--kind", "exterior")
    assert r["result"]["edges"] == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]


def test_minor(capsys):
    code, out, _ = run(capsys, "minor", "K4", "--pattern", "K5")
    assert code == 0 and out.strip() == "none"
    r = run_json(capsys, "minor", "petersen", "--pattern", "K5")
    assert r["result"]["found"] and len(r["result"]["branch_sets"]) == 5


def test_minor_pattern_file(capsys, k5_file):
    r = run_json(capsys, "minor", "K6", "--pattern", k5_file)
    assert r["result"]["found"]


def test_linkless(capsys):
    assert run_json(capsys, "linkless", "K5")["result"]["linkless"] is True
    r = run_json(capsys, "linkless", "K6")
    assert r["result"]["linkless"] is False and r["result"]["obstruction"]["pattern_n"] == 6


def test_certify_and_replay(capsys, tmp_path):
    cert_path = tmp_path / "ico.cert"
    code, out, _ = run(capsys, "certify", "icosahedron", "-r", "5", "--verify", "--out", str(cert_path))
    assert code == 0 and out.startswith("CERT 5 12 ") and "replay: ok" in out
    cert = Certificate.from_text(cert_path.read_text())
    assert replay_certificate(catalog.get("icosahedron"), cert)
    r = run_json(capsys, "replay", "icosahedron", str(cert_path), "--numeric")
    assert r["result"]["ok"] and r["result"]["numeric_checks"] >= 1
    code, out, _ = run(capsys, "replay", "octahedron", str(cert_path))
    assert code == 0 and "FAILED" in out


def test_certify_witness(capsys):
    r = run_json(capsys, "certify", "K6", "-r", "5")
    assert r["result"]["outcome"] == "witness" and len(r["result"]["branch_sets"]) == 5


def test_surface(capsys):
    r = run_json(capsys, "surface", "K8", "--genus", "1")
    assert r["result"]["obstructed"] and r["result"]["heawood"] == 7
    r = run_json(capsys, "surface", "figure1_torus", "--genus", "1")
    assert not r["result"]["obstructed"]
    r = run_json(capsys, "surface", "K7", "--genus", "1/2", "--kind", "exterior")
    assert r["result"]["obstructed"] and r["result"]["heawood"] == 6


def test_mader(capsys):
    r = run_json(capsys, "mader", "figure1_torus", "-r", "6")
    assert r["result"] == {"r": 6, "n": 10, "edges": 30, "bound": 30, "within_bound": True}


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "figure1_torus" in out and "icosahedron" in out
    code, out, _ = run(capsys, "catalog", "dump", "K3")
    assert out == "3 3\n1 2\n1 3\n2 3\n"


@pytest.mark.parametrize("argv", [
    ["rigidity", "no_such_graph", "-d", "3"],
    ["rigidity", "K4", "-d", "0"],
    ["surface", "K4", "--genus", "0"],
    ["surface", "K4", "--genus", "abc"],
    ["certify", "K4", "-r", "7"],
    ["mader", "K4", "-r", "9"],
    ["minor", "K4", "--pattern", "nope"],
    ["catalog", "dump"],
    ["minor", "icosahedron", "--pattern", "K5", "--budget", "5"],
])
def test_errors_exit_nonzero(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code != 0 and "error" in err


def test_bad_edge_list(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n1 2\n")
    code, _, err = run(capsys, "rigidity", str(p), "-d", "2")
    assert code == 1 and "header" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stressfree", "mader", "K5", "-r", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "within_bound: False" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "stressfree", "bogus"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2
