import io
import json
import subprocess
import sys

import pytest

from bhcurve.cli import run
from bhcurve.report import Report


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--format", "json")
    return code, json.loads(text)


def test_curve_verify():
    code, rep = call_json("curve", "--q", "8", "--verify")
    assert code == 0
    assert [c["name"] for c in rep["checks"]] == ["F(phi) == 0"]
    assert set(rep) == {"command", "params", "checks", "artifacts"}


def test_nodes_q4():
    code, rep = call_json("nodes", "--q", "4")
    assert code == 0
    assert rep["checks"][0]["details"] == {"expected": 6, "found": 6}
    assert len(rep["artifacts"]["nodes"]) == 6


def test_k3_quartic_json():
    code, rep = call_json("k3", "--case", "quartic", "--mode", "computed")
    assert code == 0
    det = next(c for c in rep["checks"] if c["name"] == "determinant")
    assert det["details"] == {"det": -9}
    assert len(rep["artifacts"]["gram"]) == 22


def test_k3_text_table():
    code, text = call("k3", "--case", "sextic")
    assert code == 0
    assert "C_14" in text and text.rstrip().endswith("OK")


@pytest.mark.parametrize(
    "argv",
    [
        ("curve", "--q", "9", "--perturb"),
        ("aut", "--q", "5", "--corrupt-lift"),
        ("unirational", "--q", "3", "--d", "4", "--flip-sign"),
    ],
)
def test_mutations_exit_1(argv):
    assert call(*argv)[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ("curve", "--q", "6"),
        ("cover", "--q", "5", "--d", "4"),
        ("curve", "--q", "64"),
        ("nope",),
        ("k3", "--case", "cubic"),
        ("curve",),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert call(*argv)[0] == 2


def test_slow_gate_opens():
    assert call("curve", "--q", "64", "--verify", "--slow")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("tangent", "--q", "3", "--t", "a"),
        ("tangent", "--q", "2", "--exhaustive"),
        ("aut", "--q", "4"),
        ("aut", "--q", "11", "--samples", "20", "--seed", "5"),
        ("cover", "--q", "3", "--d", "4"),
        ("unirational", "--q", "5", "--d", "2"),
        ("split", "--q", "3", "--d", "4"),
        ("split", "--q", "5", "--d", "2", "--t", "a", "--modulus", "x^2-2"),
        ("k3", "--case", "quartic", "--modulus", "x^2+x+2"),
        ("k3", "--case", "sextic", "--mode", "table_replay"),
    ],
)
def test_commands_pass(argv):
    assert call(*argv)[0] == 0


def test_seed_recorded():
    _, rep = call_json("aut", "--q", "13", "--samples", "10", "--seed", "42")
    assert rep["params"]["seed"] == 42
    assert rep["checks"][0]["details"]["seed"] == 42


@pytest.mark.parametrize("argv", [("nodes", "--q", "5"), ("cover", "--q", "5", "--d", "3"), ("k3", "--case", "sextic")])
def test_json_roundtrip_and_determinism(argv):
    _, a = call(*argv, "--format", "json")
    _, b = call(*argv, "--format", "json")
    assert a == b
    rep = Report.from_json(a)
    assert rep.to_json() + "\n" == a
    assert Report.from_dict(json.loads(a)).to_dict() == json.loads(a)


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "bhcurve.cli", "nodes", "--q", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[1:1:0]" in proc.stdout
