import json

import pytest

from nichols_radford.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_simples(capsys):
    code, data = run_json(capsys, "simples")
    assert code == 0 and len(data["simples"]) == 16
    assert {r["dim"] for r in data["simples"]} == {1, 2}
    code, data = run_json(capsys, "--m", "3", "simples")
    assert code == 0 and len(data["simples"]) == 36
    code, data = run_json(capsys, "--n", "3", "simples")
    assert code == 0 and {r["dim"] for r in data["simples"]} == {1, 2, 3}


def test_module_dot(capsys, tmp_path):
    path = tmp_path / "v31.dot"
    code, _ = run(capsys, "module", "3", "1", "--verify", "--dot", str(path))
    assert code == 0
    text = path.read_text()
    assert text.count(";") - text.count("->") == 2  # two node statements
    assert 'action="X"' in text


def test_module_projective(capsys):
    code, data = run_json(capsys, "module", "1", "2", "--projective")
    assert code == 0
    assert data["module"]["dim"] == 4
    assert data["composition_factors"] == [[1, 2], [2, 0], [0, 0], [1, 2]]
    assert data["socle"] == [[1, 2]]
    code, _ = run(capsys, "module", "3", "1", "--projective")
    assert code == 3


def test_transport(capsys):
    code, data = run_json(capsys, "transport", "1", "2")
    assert code == 0 and data["braid_equation"]
    assert data["braiding"] == [{"in": [0, 0], "out": [0, 0], "coef": "-1"}]
    code, data = run_json(capsys, "--m", "3", "transport", "2", "2")
    assert code == 0 and data["table_row"] == [4, 1]
    assert all(data["yd"].values())


def test_dims(capsys):
    code, data = run_json(capsys, "dims", "2", "1", "--max-degree", "8")
    assert code == 0
    assert data["dims"] == [1, 2, 2, 2, 1, 0, 0, 0, 0] and data["total"] == 8


def test_capacity_exit_code(capsys):
    code, _ = run(capsys, "--budget", "8", "dims", "0", "1", "--max-degree", "12")
    assert code == 4


def test_precondition_exit_code(capsys):
    assert run(capsys, "--n", "3", "classify")[0] == 3
    assert run(capsys, "--m", "0", "simples")[0] == 3


def test_classify_json_is_deterministic(capsys):
    code, first = run(capsys, "--json", "classify")
    _, second = run(capsys, "--json", "classify")
    assert code == 0 and first == second
    pairs = json.loads(first)["pairs"]
    assert [(p["i"], p["j"]) for p in pairs] == sorted((p["i"], p["j"]) for p in pairs)
    assert sum(p["finite"] for p in pairs) == 6


def test_reproduce_m2(capsys):
    code, out = run(capsys, "reproduce", "m2")
    assert code == 0
    assert out.count("dim B =") == 6
    assert run(capsys, "reproduce", "thm22")[1] == out


def test_double_check(capsys):
    code, data = run_json(capsys, "--m", "3", "double", "--check")
    assert code == 0 and data["dim"] == 144
    assert all(data["checks"].values())


def test_decimal_rendering(capsys):
    code, out = run(capsys, "--decimal", "--m", "3", "transport", "2", "2")
    assert code == 0 and "[" in out and "i]" in out
