import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from ulrich.cli import render_json, render_table, run

ROOT = Path(__file__).resolve().parent.parent
GRAPHS = ROOT / "graphs"
GOLDEN = ROOT / "tests" / "golden"


def invoke(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


GOLDEN_CASES = {
    "ns_ulrich_3_5_7": ["ns", "ulrich", "--gens", "3,5,7"],
    "ns_ulrich_8_15": ["ns", "ulrich", "--gens", "8,15"],
    "ns_info_8_15": ["ns", "info", "--gens", "8,15"],
    "graph_cycles_e6": ["graph", "cycles", "--input", str(GRAPHS / "e6.json")],
    "graph_cycles_abc": ["graph", "cycles", "--input", str(GRAPHS / "abc.json")],
    "graph_fundamental_abc": ["graph", "fundamental", "--input", str(GRAPHS / "abc.json")],
    "graph_stats_e6_z1": ["graph", "stats", "--input", str(GRAPHS / "e6.json"), "--cycle", "E1=2,E2=2,E3=3,E4=4,E5=3,E6=2"],
    "rdp_d8": ["rdp", "--type", "D", "--n", "8"],
    "rdp_e7_curve": ["rdp", "--type", "E", "--n", "7", "--dim", "1"],
    "betti_1_2": ["betti", "--dim", "1", "--mu", "2", "--upto", "3"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_json(name):
    code, out, _ = invoke(*GOLDEN_CASES[name], "--format", "json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()
    env = json.loads(out)
    assert all(c["pass"] for c in env["cross_checks"])


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_json_round_trips_to_table(name):
    _, table, _ = invoke(*GOLDEN_CASES[name])
    _, js, _ = invoke(*GOLDEN_CASES[name], "--format", "json")
    env = json.loads(js)
    assert render_table(env) == table
    assert render_json(env) == js


def test_output_is_deterministic():
    args = ["graph", "cycles", "--input", str(GRAPHS / "abc.json"), "--format", "json"]
    assert invoke(*args)[1] == invoke(*args)[1]


def test_ns_ulrich_table():
    code, out, _ = invoke("ns", "ulrich", "--gens", "3,5,7")
    assert code == 0
    assert "3,5,7       1         3   3" in out


def test_graph_cycles_e6_has_two_cycles():
    _, out, _ = invoke("graph", "cycles", "--input", str(GRAPHS / "e6.json"), "--format", "json")
    env = json.loads(out)
    assert [c["colength"] for c in env["results"]["cycles"]] == [1, 2]


def test_betti_table():
    _, out, _ = invoke("betti", "--dim", "1", "--mu", "2", "--upto", "3")
    rows = [line.split() for line in out.splitlines() if line.startswith("  ") and line.strip()[0].isdigit()]
    assert [int(r[1]) for r in rows] == [1, 2, 2, 2]


def test_graph_from_stdin(monkeypatch):
    text = (GRAPHS / "cyclic.json").read_text()
    code, out, _ = invoke("graph", "cycles", "--input", "-", "--format", "json", stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["results"]["count"] == 1


def test_brute_and_chain_methods(tmp_path):
    path = str(GRAPHS / "abc.json")
    _, a, _ = invoke("graph", "cycles", "--input", path, "--method", "brute", "--format", "json")
    _, b, _ = invoke("graph", "cycles", "--input", path, "--method", "chain", "--format", "json")
    cyc = lambda s: [c["cycle"] for c in json.loads(s)["results"]["cycles"]]
    assert cyc(a) == cyc(b)


@pytest.mark.parametrize(
    "argv",
    [
        ["ns", "ulrich"],
        ["ns", "ulrich", "--gens", "4,6"],
        ["ns", "ulrich", "--gens", "3,5,7", "--method", "magic"],
        ["ns", "ulrich", "--gens", "3,5,7", "--method", "gorenstein"],
        ["graph", "fundamental"],
        ["graph", "fundamental", "--input", "/nonexistent.json"],
        ["graph", "stats", "--input", str(GRAPHS / "e6.json")],
        ["graph", "stats", "--input", str(GRAPHS / "e6.json"), "--cycle", "E1=1"],
        ["graph", "cycles", "--input", str(GRAPHS / "e6.json"), "--method", "x"],
        ["rdp", "--type", "F", "--n", "4"],
        ["rdp", "--type", "A"],
        ["rdp", "--type", "A", "--n", "3", "--dim", "3"],
        ["betti", "--dim", "3", "--mu", "2"],
        ["betti", "--dim", "1"],
        ["ns", "ulrich", "--bogus"],
        ["nothing"],
    ],
)
def test_invalid_input_exits_2(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ""
    assert err.startswith("ulrich:") and err.count("\n") == 1


def test_malformed_graph_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = invoke("graph", "fundamental", "--input", str(bad))
    assert code == 2 and "not valid JSON" in err
    bad.write_text(json.dumps({"vertices": [{"id": "A", "self": 0}]}))
    code, _, err = invoke("graph", "fundamental", "--input", str(bad))
    assert code == 2 and "negative definite" in err


def test_resource_guard_exits_3(monkeypatch):
    code, _, err = invoke("ns", "ulrich", "--gens", "8,15", "--method", "brute")
    assert code == 3 and "ULRICH_CAP" in err
    monkeypatch.setenv("ULRICH_CAP", "1")
    code, _, _ = invoke("graph", "cycles", "--input", str(GRAPHS / "e6.json"), "--method", "brute")
    assert code == 3
    code, _, _ = invoke("graph", "cycles", "--input", str(GRAPHS / "e6.json"), "--method", "brute", "--cap", "50")
    assert code == 0


def test_selfcheck_passes():
    code, out, _ = invoke("selfcheck", "--format", "json")
    env = json.loads(out)
    assert code == 0
    assert env["results"]["checks"] == env["results"]["passed"] > 40


def test_console_module_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "ulrich.cli", "betti", "--dim", "2", "--mu", "3", "--upto", "2", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert [r["beta"] for r in json.loads(proc.stdout)["results"]["betti"]] == [1, 3, 4]
