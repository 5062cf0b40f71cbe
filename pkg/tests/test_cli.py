import json
import subprocess
import sys

import pytest

from spoquant.cli import diffop_from_json, diffop_json, main
from spoquant.grassmann import T1, X
from spoquant.operators import DiffOp

WORKED = ["--k", "1", "--lambda", "0", "--delta", "1/3", "--f1", "x", "--f2", "0"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quantize_json(capsys):
    code, out, _ = run(capsys, "quantize", *WORKED, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "Unique"
    terms = data["operator"]["terms"]
    assert [(t["l"], t["m"], t["n"]) for t in terms] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert terms[0]["coeff"] == {"f0": [], "f1": [], "f2": ["3/4"], "f12": []}
    assert terms[1]["coeff"] == {"f0": [], "f1": ["3/4"], "f2": [], "f12": []}
    assert terms[2]["coeff"]["f0"] == ["0", "1"]
    assert data["operator"]["mu"] == "1/3"


def test_methods_give_identical_json(capsys):
    _, a, _ = run(capsys, "quantize", *WORKED, "--format", "json", "--method", "iterative")
    _, b, _ = run(capsys, "quantize", *WORKED, "--format", "json", "--method", "closed-form")
    assert json.loads(a)["operator"] == json.loads(b)["operator"]


def test_weights_from_mu(capsys):
    _, a, _ = run(capsys, "quantize", "--k", "1", "--mu", "1/3", "--delta", "1/3", "--f1", "x", "--format", "json")
    _, b, _ = run(capsys, "quantize", "--k", "1", "--mu", "1/3", "--lambda", "0", "--f1", "x", "--format", "json")
    assert json.loads(a) == json.loads(b)


def test_no_solution_exit_code(capsys):
    code, out, _ = run(capsys, "quantize", "--k", "2", "--lambda", "1/5", "--delta", "2", "--f1", "x^3")
    assert code == 2
    assert "NoSolution" in out and "pivot 0" in out
    code, out, _ = run(capsys, "quantize", "--k", "2", "--lambda", "1/5", "--delta", "2", "--f1", "x^3",
                       "--method", "closed-form", "--format", "json")
    assert code == 2 and json.loads(out)["status"] == "ZeroDenominator"


def test_ambiguous_exits_zero(capsys):
    code, out, _ = run(capsys, "quantize", "--k", "2", "--lambda", "1/3", "--delta", "4/3", "--f1", "x^3")
    assert code == 0 and "Ambiguous" in out


@pytest.mark.parametrize("argv", [
    ["quantize", "--k", "1", "--lambda", "0"],
    ["quantize", "--k", "1", "--lambda", "0.5", "--delta", "1"],
    ["quantize", "--k", "1", "--lambda", "0", "--delta", "1", "--f1", "x +"],
    ["quantize", "--k", "1", "--lambda", "0", "--delta", "1", "--mu", "3"],
    ["quantize", "--k", "0", "--lambda", "0", "--delta", "1", "--f1", "x", "--f2", "1"],
    ["embed"],
    ["embed", "--matrix", "1 0 0 0;0 1 0 0;0 0 1 0;0 0 0 1"],
    ["lie", "--f", "x", "--target", "operator", "--op", "{bad json"],
    ["frobnicate"],
    ["critical", "--max-k", "1/3"],
    ["gamma", "--f", "x^2 + x*t1", "--closed-form", "--k", "1", "--lambda", "0", "--delta", "1", "--f1", "x"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 1


def test_critical(capsys):
    code, out, _ = run(capsys, "critical", "--max-k", "2", "--format", "json")
    values = json.loads(out)
    assert code == 0 and {"0", "1/2", "1"} <= set(values)


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--k", "1", "--lambda", "0", "--delta", "1/3", "--trials", "20")
    assert code == 0 and out.strip() == "PASS 8/8 generators"
    code, out, _ = run(capsys, "check", "--k", "1", "--lambda", "0", "--delta", "1/2", "--trials", "2",
                       "--max-degree", "3")
    assert code == 2 and out.startswith("FAIL")


def test_gamma_and_casimir(capsys):
    code, out, _ = run(capsys, "gamma", "--f", "x^2", *WORKED)
    code2, out2, _ = run(capsys, "gamma", "--f", "x^2", *WORKED, "--closed-form")
    assert code == code2 == 0 and out == out2 == "k=1/2: F1 = -x*t1; F2 = -x*t2\n"
    code, out, _ = run(capsys, "casimir", *WORKED)
    assert out == "k=1: F1 = 4/9*x; F2 = 0\n"


def test_lie_targets(capsys):
    _, out, _ = run(capsys, "lie", "--f", "x", "--target", "density", "--lambda", "2", "--f1", "x")
    assert out.strip() == "3*x"
    _, out, _ = run(capsys, "lie", "--f", "1", "--target", "operator", *WORKED)
    assert out.strip() == "(1)*dx"
    op = json.dumps(diffop_json(DiffOp({(1, 0, 0): X * X}, 0, 0)))
    _, out, _ = run(capsys, "lie", "--f", "1", "--target", "operator", "--op", op, "--format", "json")
    assert diffop_from_json(json.loads(out)) == DiffOp({(1, 0, 0): X * 2}, 0, 0)
    _, out, _ = run(capsys, "lie", "--f", "t1t2", "--target", "symbol", "--k", "1/2", "--delta", "2/5", "--f1", "1")
    assert out.strip() == "k=1/2: F1 = 0; F2 = -1/2"


def test_lie_operator_from_file(capsys, tmp_path):
    path = tmp_path / "op.json"
    path.write_text(json.dumps(diffop_json(DiffOp({(0, 1, 0): T1}, 1, 2))))
    code, out, _ = run(capsys, "lie", "--f", "x", "--target", "operator", "--op", f"@{path}", "--format", "json")
    assert code == 0 and json.loads(out)["lambda"] == "1"


def test_embed(capsys):
    _, out, _ = run(capsys, "embed", "--basis", "0", "--format", "json")
    assert json.loads(out)["hamiltonian"]["f0"] == ["0", "2"]
    _, out, _ = run(capsys, "embed", "--matrix", "0,0,0,0; 1,0,0,0; 0,0,0,0; 0,0,0,0")
    assert out.strip().endswith("hamiltonian: -1")


def test_json_round_trip():
    D = DiffOp({(2, 1, 1): X * T1, (0, 0, 0): X - 3}, "1/2", "-5/3")
    assert diffop_from_json(json.loads(json.dumps(diffop_json(D)))) == D


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spoquant", "critical", "--max-k", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.split() == ["0", "1/2", "1"]
