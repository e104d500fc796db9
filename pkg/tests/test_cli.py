import json

import pytest

from krcrystal import cli
from krcrystal.config import Settings
from krcrystal.services import verify

D4_22 = ["-t", "D,4,1", "-r", "2", "-s", "2"]


def _run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _envelope(err):
    return json.loads(err.strip().splitlines()[-1])


def test_session_transcript(capsys):
    code, out, _ = _run(capsys, "op", *D4_22, "--e", "0", "--elem", "[[3],[1]]")
    assert (code, out) == (0, "[[-2],[3]]\n")
    code, out, _ = _run(capsys, "sigma", *D4_22, "--elem", "[[3],[1]]")
    assert (code, out) == (0, "[[-2,-1],[2,3]]\n")


def test_undefined_operator_prints_null(capsys):
    code, out, _ = _run(capsys, "op", *D4_22, "--f", "1", "--elem", "[]")
    assert (code, out) == (0, "null\n")


def test_build_summary(capsys):
    code, out, _ = _run(capsys, "build", *D4_22)
    summary = json.loads(out)
    assert code == 0
    assert summary["size"] == 329
    assert summary["cartan"] == ["D", 4, 1]
    assert [c["size"] for c in summary["components"]] == [300, 28, 1]


def test_build_writes_dot(capsys, tmp_path):
    target = tmp_path / "b11.dot"
    code, _, _ = _run(capsys, "build", "-t", "D,4,1", "-r", "1", "-s", "1", "--dot", str(target))
    assert code == 0
    assert target.read_text().count("->") == 10


def test_graph_to_stdout(capsys):
    code, out, _ = _run(capsys, "graph", "-t", "D,4,1", "-r", "1", "-s", "1", "--dot", "-")
    assert code == 0
    assert out.startswith("digraph crystal {")
    assert out.count("->") == 10
    code, out, _ = _run(capsys, "graph", "-t", "D,4,1", "-r", "1", "-s", "1", "--dot", "-", "--classical")
    assert out.count("->") == 8


def test_minimal_list(capsys):
    code, out, _ = _run(capsys, "minimal", *D4_22, "--list")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 11
    assert all(set(json.loads(line)) == {"epsilon", "phi", "rows"} for line in lines)


def test_minimal_weight(capsys):
    code, out, _ = _run(capsys, "minimal", "-t", "D,8,1", "-r", "3", "-s", "9", "--weight", "1,2,1,1,0,1,0,0,0")
    assert code == 0
    assert json.loads(out) == [[3, 5, -5, -1, -1], [2, 2, 5, -5, -2], [1, 1, 1, 5, -5, -3, -2, -1, -1]]


def test_diagram_of_weight(capsys):
    code, out, _ = _run(capsys, "diagram", "-t", "D,8,1", "-r", "3", "-s", "9", "--weight", "1,2,1,1,0,1,0,0,0")
    assert code == 0
    assert json.loads(out) == [
        ["", "", "+", "-", "-"],
        ["", "", "", "", "+"],
        ["", "", "", "", "", "", "+", "-", "-"],
    ]


def test_eps_phi(capsys):
    code, out, _ = _run(capsys, "eps-phi", *D4_22, "--elem", "[]")
    assert code == 0
    assert json.loads(out) == {"epsilon": [2, 0, 0, 0, 0], "phi": [2, 0, 0, 0, 0], "level": 2}


BIG = '[["+","-"],["","+"],["","","-","-"],["","","","+"]]'
D6_45 = ["-t", "D,6,1", "-r", "4", "-s", "5"]


def test_diagram_commands(capsys):
    code, out, _ = _run(capsys, "phi", *D6_45, "--diagram", BIG)
    assert json.loads(out) == [[4, -4], [3, 4], [2, 3, -1, -1], [1, 1, 2, 2]]
    code, out, _ = _run(capsys, "phi-string", *D6_45, "--diagram", BIG)
    assert len(json.loads(out)) == 26
    code, out, _ = _run(capsys, "s-involution", *D6_45, "--diagram", BIG)
    assert json.loads(out) == [["-"], [""], ["", "", "+", "-"], ["", "", "", "+"]]


def test_pair_commands(capsys):
    P = '[["-"],["+"],["","+","-"],["","",""]]'
    p = '[["-"],["","","+"]]'
    code, out, _ = _run(capsys, "psi", "-t", "D,6,1", "-r", "4", "-s", "3", "--P", P, "--p", p)
    assert code == 0
    assert json.loads(out) == [[-3], [-4], [3, 4, -1], [1, 3, 3]]
    code, out, _ = _run(capsys, "pair-of", "-t", "D,6,1", "-r", "4", "-s", "3", "--elem", out.strip())
    assert code == 0
    assert json.loads(out) == {"P": json.loads(P), "p": json.loads(p)}


def test_verify_perfect(capsys):
    code, out, _ = _run(capsys, "verify", "-t", "D,4,1", "-r", "1", "-s", "1", "--perfect")
    report = json.loads(out)
    assert code == 0
    assert report["passed"] is True
    assert report["kind"] == "perfect"


@pytest.mark.parametrize(
    "argv, title",
    [
        (["sigma", "-t", "E,6,1", "-r", "1", "-s", "1", "--elem", "[]"], "Unknown Cartan type"),
        (["sigma", "-t", "D,4,1", "-r", "3", "-s", "1", "--elem", "[]"], "Spin node"),
        (["sigma", *D4_22, "--elem", "[[3],[1]"], "Malformed document"),
        (["sigma", *D4_22, "--elem", "[[1],[2]]"], "Invalid element"),
        (["minimal", *D4_22, "--weight", "1,1,1,1,1"], "Invalid weight"),
    ],
)
def test_domain_errors_exit_one(capsys, argv, title):
    code, out, err = _run(capsys, *argv)
    envelope = _envelope(err)
    assert code == 1
    assert out == ""
    assert envelope["ok"] is False
    assert envelope["title"] == title


def test_budget_errors_exit_two(capsys, monkeypatch):
    monkeypatch.setattr(verify, "settings", Settings(TENSOR_BUDGET=10))
    code, _, err = _run(capsys, "verify", "-t", "D,4,1", "-r", "1", "-s", "1", "--perfect")
    assert code == 2
    assert _envelope(err)["status"] == 413


def test_logs_go_to_stderr(capsys):
    _, out, err = _run(capsys, "build", "-t", "D,4,1", "-r", "1", "-s", "1")
    json.loads(out)
    assert all(json.loads(line)["level"] for line in err.splitlines())


@pytest.mark.parametrize(
    "argv",
    [
        ["sigma", *D4_22],
        ["op", *D4_22, "--e", "0", "--f", "1", "--elem", "[]"],
        ["build", "-t", "D,4,1", "-r", "two", "-s", "2"],
        ["no-such-command"],
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert "usage:" in err


def test_help_exits_zero(capsys):
    code, out, _ = _run(capsys, "--help")
    assert code == 0
    assert "usage:" in out
