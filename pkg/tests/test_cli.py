import json

import pytest

from greenring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_tensor_text(capsys):
    code, out = run(capsys, "tensor", "--algebra", "mabar", "M1", "W1")
    assert code == 0
    assert out.splitlines()[0] == "S(-,-) + 2·P(+,+)"
    assert "agrees" in out


def test_tensor_json_round_trip(capsys):
    code, out = run(capsys, "tensor", "--algebra", "HH", "--format", "json", "C(1,2)", "C(1,3)")
    data = json.loads(out)
    assert data["agree"] and json.loads(json.dumps(data)) == data
    assert {t["label"]: t["coeff"] for t in data["closed_form"]["terms"]} == {"P(+,+)": "2", "P(-,-)": "2"}


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("GREENRING_SEED", "7")
    _, out = run(capsys, "tensor", "--format", "json", "--seed", "1", "N1", "N1")
    assert json.loads(out)["seed"] == 7


def test_algebra_outputs(capsys):
    code, out = run(capsys, "algebra", "--name", "DH4")
    assert code == 0 and "blocks 3" in out
    code, out = run(capsys, "algebra", "--name", "H4", "--format", "json")
    data = json.loads(out)
    assert data["dim"] == 4 and all(data["axioms"].values())
    code, out = run(capsys, "algebra", "--name", "mabar", "--format", "dot")
    assert out.startswith("digraph")


def test_module_and_diagram(capsys):
    code, out = run(capsys, "module", "--algebra", "HH", "--format", "json", "C(2,3)")
    data = json.loads(out)
    assert code == 0 and data["valid"] and data["label"]
    _, dot = run(capsys, "diagram", "S(+,+)")
    assert "->" not in dot


def test_green_table(capsys):
    _, out = run(capsys, "green", "--algebra", "DH4", "P+", "S(-,-)")
    assert out.splitlines() == ["P(+,-) * P(+,-) = P(-,-)", "P(+,-) * S(-,-) = P(-,+)",
                                "S(-,-) * P(+,-) = P(-,+)", "S(-,-) * S(-,-) = 1"]


def test_verify_exit_codes(capsys, tmp_path):
    target = tmp_path / "q.json"
    code, _ = run(capsys, "verify", "quivers", "--format", "json", "--out", str(target))
    data = json.loads(target.read_text())
    assert code == 0 and data["summary"]["failed"] == 0
    assert data["suite"] == "quivers"


def test_bad_label_exit_code(capsys):
    assert main(["tensor", "M0", "W1"]) == 2


def test_bad_etas_rejected():
    with pytest.raises(SystemExit):
        main(["verify", "quivers", "--etas", "0"])
