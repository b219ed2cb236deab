"""End-to-end runs of the installed command line, JSON parsed from stdout."""

import json
import pathlib
import subprocess
import sys
import types

from monomial_hh.checks import CheckReport
from monomial_hh.cli import _report_command

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
CONE = str(FIXTURES / "example_cone.alg")
A6 = str(FIXTURES / "triangular_a6.alg")


def run_cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "monomial_hh", *argv],
        capture_output=True,
        text=True,
    )


def run_json(*argv):
    out = run_cli(*argv, "--json")
    assert out.returncode == 0, out.stderr
    doc = json.loads(out.stdout)
    assert doc["schema"] == "monomial-hh/1"
    return doc


def test_hh_cone_dim_row():
    out = run_cli("hh", CONE, "--max-degree", "8")
    assert out.returncode == 0
    assert "dims 3 3 2 2 3 3 2 2 3" in out.stdout
    doc = run_json("hh", CONE, "--max-degree", "8")
    assert doc["dims"] == [3, 3, 2, 2, 3, 3, 2, 2, 3]
    assert doc["field"] == "q"
    assert len(doc["spaces"]) == 9


def test_hh_field_override():
    doc = run_json("hh", CONE, "--max-degree", "2", "--field", "fp:3")
    assert doc["field"] == "fp:3"
    assert doc["dims"] == [3, 3, 2]


def test_basis_json():
    doc = run_json("basis", CONE)
    assert doc["dim"] == 10
    assert len(doc["basis"]) == 10
    words = [row["word"] for row in doc["basis"]]
    assert "zetaalpha" in words and "gammabeta" in words
    lengths = [row["length"] for row in doc["basis"]]
    assert lengths == sorted(lengths)


def test_ambiguities_degrees():
    doc = run_json("ambiguities", CONE, "--degree", "1")
    assert doc["count"] == 4
    assert sorted(r["word"] for r in doc["ambiguities"]) == sorted(
        ["betazeta", "zetagamma", "alphazetaalpha", "zetaalphazeta"]
    )
    doc = run_json("ambiguities", CONE, "--degree", "-1")
    assert [r["word"] for r in doc["ambiguities"]] == ["e(1)", "e(2)", "e(3)"]


def test_check_commands_pass():
    for cmd in (
        ["resolution-check", CONE, "--max-degree", "4"],
        ["diagonal-check", CONE, "--max-degree", "4"],
        ["verify", A6, "--all", "--max-degree", "5"],
        ["verify", CONE, "--oracle", "--max-degree", "4"],
        ["verify", CONE, "--graded-commutativity", "--max-degree", "3"],
    ):
        doc = run_json(*cmd)
        assert doc["ok"] is True
        assert all(c["ok"] for c in doc["checks"])


def test_cup_blocks():
    doc = run_json("cup", CONE, "--max-total-degree", "3")
    blocks = {(b["i"], b["j"]): b["table"] for b in doc["blocks"]}
    # unit row: the third HH^0 representative is the identity on HH^1
    assert blocks[(0, 1)][2] == [{"0": "1"}, {"1": "1"}, {"2": "1"}]
    # degree (1,2) carries the nonzero products this algebra is known for
    assert any(cls for row in blocks[(1, 2)] for cls in row)


def test_random_suite_cli():
    out = run_cli("random", "--triangular", "--trials", "6", "--seed", "7", "--json")
    assert out.returncode == 0, out.stderr
    doc = json.loads(out.stdout)
    assert doc["ok"] is True
    assert len(doc["trials"]) == 6
    assert [t["seed"] for t in doc["trials"]] == [7, 8, 9, 10, 11, 12]


def test_byte_identical_reruns():
    for argv in (
        ["hh", CONE, "--max-degree", "4", "--json"],
        ["cup", CONE, "--max-total-degree", "2"],
        ["random", "--trials", "4", "--seed", "3", "--json"],
    ):
        a = run_cli(*argv)
        b = run_cli(*argv)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout


def test_write_is_canonical():
    first = run_cli("write", A6)
    assert first.returncode == 0
    tmp = pathlib.Path("/tmp/canon_a6.alg")
    tmp.write_text(first.stdout)
    second = run_cli("write", str(tmp))
    assert second.stdout == first.stdout


def test_input_errors_exit_2():
    bad = pathlib.Path("/tmp/cli_bad.alg")
    bad.write_text("vertices 1 2\narrow a: 1 -> 2\nrelation a nope\n")
    out = run_cli("basis", str(bad))
    assert out.returncode == 2
    assert "line 3, col 12" in out.stderr

    out = run_cli("basis", "/tmp/does_not_exist.alg")
    assert out.returncode == 2

    out = run_cli("hh", CONE, "--max-degree", "1", "--field", "fp:nope")
    assert out.returncode == 2

    out = run_cli("verify", CONE)  # no check selected
    assert out.returncode == 2

    out = run_cli("verify", CONE, "--triangular-vanishing", "--max-degree", "2")
    assert out.returncode == 2  # cone has a cycle, the flag does not apply


def test_failing_check_exits_1():
    args = types.SimpleNamespace(json=True)
    reports = [CheckReport("good", True, ""), CheckReport("bad", False, "boom")]
    assert _report_command(args, reports, "verify") == 1
    assert _report_command(args, reports[:1], "verify") == 0
