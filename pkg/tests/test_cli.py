import json
from pathlib import Path

import pytest

import quantum_schubert.cli as cli
from quantum_schubert.cli import EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main
from quantum_schubert.errors import InvariantViolationError

CONFIG = str(Path(__file__).parent / "qsc.yaml")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--n", "4", "--r", "2", "--i", "2,4", "--j", "1,3")
    assert code == EXIT_OK
    assert out.strip() == "σ[2,2] + q·σ[]"


def test_product_with_the_unit_prints_the_partition(capsys):
    code, out, _ = run(capsys, "product", "--n", "4", "--r", "2", "--i", "3,4", "--j", "1,2")
    assert code == EXIT_OK
    assert out.strip() == "σ[2,2]"
    code, payload = run_json(capsys, "product", "--n", "4", "--r", "2", "--i", "3,4", "--j", "3,4")
    assert payload["text"] == "σ[]"


def test_product_json(capsys):
    code, payload = run_json(capsys, "product", "--n", "4", "--r", "2", "--i", "1,2", "--j", "1,2", "--expand", "left")
    assert code == EXIT_OK
    assert payload["text"] == "q²·σ[]"
    assert payload["product"]["terms"][0]["q"] == 2


@pytest.mark.parametrize("index", ["1,5", "a,b", "1", "2,2"])
def test_product_rejects_bad_indices(capsys, index):
    code, _, err = run(capsys, "product", "--n", "4", "--r", "2", "--i", index, "--j", "1,3")
    assert code == EXIT_INPUT
    assert err.startswith("qsc: error:")


def test_bad_grassmannian(capsys):
    code, _, _ = run(capsys, "product", "--n", "4", "--r", "4", "--i", "1,2,3,4", "--j", "1,2,3,4")
    assert code == EXIT_INPUT


def test_usage_errors_exit_with_input_code():
    with pytest.raises(SystemExit) as e:
        main(["product", "--n", "4"])
    assert e.value.code == EXIT_INPUT
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == EXIT_INPUT


def test_gw(capsys):
    code, out, _ = run(capsys, "gw", "--n", "4", "--r", "2", "--classes", "1,2/1,2/1,2", "--d", "2")
    assert code == EXIT_OK
    assert out.strip() == "1"


def test_gw_trace_of_a_vanishing_invariant(capsys):
    code, out, _ = run(capsys, "gw", "--n", "4", "--r", "2", "--classes", "1,2/1,2/1,2/1,2", "--d", "3", "--trace")
    lines = out.strip().splitlines()
    assert code == EXIT_OK
    assert lines[0] == "0"
    assert lines[1] == "start <{1,2},{1,2},{1,2},{1,2}>_3"
    assert "invariant vanishes" in lines[-2]
    assert lines[-1] == "vanishing"


def test_gw_outside_the_dimension_condition(capsys):
    code, payload = run_json(capsys, "gw", "--n", "4", "--r", "2", "--classes", "1,2/1,2/1,2", "--d", "1", "--trace")
    assert code == EXIT_OK
    assert payload["value"] == 0
    assert payload["reduction"] is None


def test_gw_needs_three_classes(capsys):
    code, _, _ = run(capsys, "gw", "--n", "4", "--r", "2", "--classes", "1,2/1,2", "--d", "0")
    assert code == EXIT_INPUT


def test_transform_instance(capsys):
    code, out, _ = run(capsys, "transform", "--n", "4", "--r", "2", "--classes", "1,2/1,2/1,2", "--d", "2",
                       "--shifts", "2,1,1")
    assert code == EXIT_OK
    assert out.strip() == "<{1,2},{1,2},{1,2}>_2 -> <{3,4},{1,4},{1,4}>_0"


def test_transform_to_negative_degree(capsys):
    code, payload = run_json(capsys, "transform", "--n", "4", "--r", "2", "--classes", "1,2/1,2/3,4/3,4",
                             "--d", "1", "--shifts", "2,2,0,0")
    assert code == EXIT_OK
    assert payload["vanishing"] is True
    assert payload["degree"] == -1


def test_transform_operator_power(capsys):
    code, out, _ = run(capsys, "transform", "--n", "4", "--r", "2", "--i", "1,3", "--k", "1")
    assert code == EXIT_OK
    assert out.strip() == "q·σ[1]"


@pytest.mark.parametrize("extra", [[], ["--classes", "1,2/1,2/1,2"], ["--classes", "1,2/1,2/1,2", "--shifts", "1,1,1"]])
def test_transform_argument_errors(capsys, extra):
    code, _, _ = run(capsys, "transform", "--n", "4", "--r", "2", *extra)
    assert code == EXIT_INPUT


def test_fw(capsys):
    code, payload = run_json(capsys, "fw", "--n", "4", "--r", "2", "--i", "1,2", "--j", "1,2")
    assert code == EXIT_OK
    assert payload["degree"] == 2
    assert payload["verified"] is True
    code, out, _ = run(capsys, "fw", "--n", "4", "--r", "2", "--i", "2,4", "--j", "2,4")
    assert "σ[2] + σ[1,1]" in out


def test_roots_center(capsys):
    code, payload = run_json(capsys, "roots", "--type", "A", "--rank", "3")
    assert code == EXIT_OK
    assert [e["element"] for e in payload["elements"]] == ["1", "x1", "x2", "x3"]
    assert all(e["sign_check"] for e in payload["elements"])
    assert payload["elements"][0]["weyl_word"] == []


def test_roots_phi(capsys):
    code, out, _ = run(capsys, "roots", "--type", "E6", "--report", "phi")
    assert code == EXIT_OK
    assert out.strip().endswith("injective homomorphism: True")


def test_roots_codim(capsys):
    code, payload = run_json(capsys, "roots", "--type", "A3", "--report", "codim", "--node", "2")
    assert code == EXIT_OK
    assert payload["parabolic"] == {"levi": [1, 3], "sigma": [2]}
    assert sorted(c["codim"] for c in payload["cosets"]) == [0, 1, 2, 2, 3, 4]
    for coset in payload["cosets"]:
        for moved in coset["center"].values():
            assert moved["codim"] - coset["codim"] == moved["shift"]


@pytest.mark.parametrize("argv", [["--type", "E5"], ["--type", "A3", "--report", "codim", "--node", "5"],
                                  ["--type", "Q", "--rank", "2"]])
def test_roots_errors(capsys, argv):
    code, _, _ = run(capsys, "roots", *argv)
    assert code == EXIT_INPUT


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fw", "--config", CONFIG)
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "PASS"


def test_verify_json_and_overrides(capsys):
    code, payload = run_json(capsys, "verify", "--suite", "rings", "--config", CONFIG, "--max-n", "3", "--seed", "5")
    assert code == EXIT_OK
    assert payload["passed"] is True
    assert payload["config"]["max_n"] == 3
    assert payload["config"]["seed"] == 5


def test_verify_bad_config(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "1", "--threads", "1")
    assert code == EXIT_INPUT
    assert "max_n" in err


def test_invariant_violations_exit_with_violation_code(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise InvariantViolationError("broken")

    monkeypatch.setattr(cli, "qmul_basis", broken)
    code, _, err = run(capsys, "product", "--n", "4", "--r", "2", "--i", "1,2", "--j", "1,2")
    assert code == EXIT_VIOLATION
    assert "broken" in err
