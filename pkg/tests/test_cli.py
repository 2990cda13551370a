import json
import subprocess
import sys

import pytest

from meshcat.cli import main, parse_budget


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_budget():
    assert parse_budget("5s") == 5
    assert parse_budget("250ms") == 0.25
    assert parse_budget("2m") == 120
    assert parse_budget(None) is None
    with pytest.raises(ValueError):
        parse_budget("soon")


def test_type_validate(capsys):
    code, out, _ = run(capsys, "type", "validate", "--kind", "D", "--n", "6", "--f", "1/3")
    assert code == 0
    data = json.loads(out)
    assert data["valid"] and data["r"] == 3 and not data["standard"]


@pytest.mark.parametrize("argv", [
    ["type", "validate", "--kind", "A", "--n", "4", "--t", "2"],
    ["type", "validate", "--kind", "D", "--n", "6", "--f", "0"],
    ["check", "nilpotency", "--kind", "D", "--n", "6", "--f", "1/2"],
])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_dot_output(capsys):
    code, out, _ = run(capsys, "quiver", "--m", "2", "--dot", "-")
    assert code == 0 and out.startswith("digraph")
    nodes = [l for l in out.splitlines() if "[label=" in l]
    assert len(nodes) == 18
    assert out.count("->") == 30


def test_dot_with_projectives(capsys):
    code, out, _ = run(capsys, "quiver", "--m", "2", "--dot", "-", "--with-projectives", "--config", "lambda")
    assert code == 0
    assert len([l for l in out.splitlines() if "[label=" in l]) == 20


def test_json_adjacency(capsys, tmp_path):
    path = tmp_path / "q.json"
    code, _, _ = run(capsys, "quiver", "--m", "2", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data["arrows"]) == 30


def test_outputs_are_deterministic():
    cmds = [
        ["quiver", "--m", "2", "--dot", "-", "--tau"],
        ["hom", "--m", "2"],
        ["check", "hprime", "--m", "2"],
    ]
    for argv in cmds:
        a = subprocess.run([sys.executable, "-m", "meshcat", *argv], capture_output=True, check=True).stdout
        b = subprocess.run([sys.executable, "-m", "meshcat", *argv], capture_output=True, check=True).stdout
        assert a == b and a


@pytest.mark.parametrize("what", ["config", "nilpotency", "hprime", "omega", "auts"])
def test_checks_pass_m2(capsys, what):
    argv = ["check", what, "--m", "2"]
    if what == "config":
        argv += ["--config", "lambda"]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_modified_nilpotency(capsys):
    code, out, _ = run(capsys, "check", "nilpotency", "--m", "2", "--modified")
    data = json.loads(out)
    assert code == 0 and data["nilpotency"] == 9 and data["engine"] == "rewrite"


def test_other_presets_and_types(capsys):
    code, _, _ = run(capsys, "check", "config", "--m", "2", "--config", "simples")
    assert code == 0
    code, _, _ = run(capsys, "check", "nilpotency", "--kind", "D", "--n", "4", "--f", "1")
    assert code == 0


def test_budget_exit_4(capsys):
    code, _, err = run(capsys, "check", "config", "--kind", "E", "--n", "7", "--budget", "1ms")
    assert code == 4 and "budget" in err.lower()


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("MESHCAT_BUDGET_SECS", "0.001")
    code, _, _ = run(capsys, "check", "config", "--kind", "E", "--n", "7")
    assert code == 4
    code, _, _ = run(capsys, "check", "config", "--kind", "E", "--n", "7", "--budget", "60s")
    assert code == 0


def test_hom_json(capsys):
    code, out, _ = run(capsys, "hom", "--kind", "A", "--n", "2", "--f", "1/2")
    rows = json.loads(out)
    assert code == 0
    assert [(r["source"], r["target"]) for r in rows] == [
        ("0:1", "0:1"), ("0:1", "0:2"), ("0:2", "0:1"), ("0:2", "0:2")]
    assert all(r["dim"] == 1 for r in rows)


def test_hom_engines_agree(capsys):
    _, a, _ = run(capsys, "hom", "--m", "2", "--engine", "degree")
    _, b, _ = run(capsys, "hom", "--m", "2", "--engine", "rewrite")
    assert a == b


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all", "--m", "2")
    data = json.loads(out)
    assert code == 0
    assert data and all(v["pass"] for v in data["checks"].values())


def test_failed_check_exit_1(capsys, monkeypatch):
    import meshcat.cli as cli
    monkeypatch.setattr(cli, "check_auts", lambda rc: (False, {"order": 0}))
    code, out, _ = run(capsys, "check", "auts", "--m", "2")
    assert code == 1 and json.loads(out)["pass"] is False


def test_unwritable_output_exit_3(capsys, tmp_path):
    code, _, _ = run(capsys, "hom", "--m", "2", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 3
