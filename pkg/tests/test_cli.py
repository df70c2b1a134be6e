"""End-to-end command-line behaviour, exit codes and determinism."""

import json

import pytest

from sga.cli import main
from sga.matrices import Matrix
from sga.representation import RepConfig, Signature, build_representation


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_outputs_representation(capsys):
    code, out, _ = run(capsys, "build", "-K", "3", "-M", "1")
    assert code == 0
    blob = json.loads(out)
    assert blob["dim"] == 4
    rep = build_representation(RepConfig(Signature(spacelike=3, timelike=1)))
    assert Matrix.from_json(blob["epsilon"]) == rep.eps
    assert Matrix.from_json(blob["gamma_chiral_2bar"]) == rep.gamma_chiral(2, barred=True)


def test_build_determinism(capsys):
    _, first, _ = run(capsys, "build", "-K", "4")
    _, second, _ = run(capsys, "build", "-K", "4")
    assert first == second


def test_verify_pauli_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pauli")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_dirac_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dirac", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["failed"] == 0 and blob["passed"] == 16 + 2 - 2  # 16 identity checks


def test_verify_seed_determinism(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "exclusion", "--seed", "7")
    _, second, _ = run(capsys, "verify", "--suite", "exclusion", "--seed", "7")
    assert first == second


def test_eval_examples(capsys):
    code, out, _ = run(capsys, "eval", "-K", "3", "e[d]' e[u]")
    assert code == 0
    blob = json.loads(out)
    assert blob["species"] == "scalar"
    assert blob["value"] == {"re": ["-1", "0"], "im": ["0", "0"]}


def test_eval_forbidden(capsys):
    code, _, err = run(capsys, "eval", "-K", "3", "e[u] e[d]")
    assert code == 1
    assert "forbidden" in err
    code, out, _ = run(capsys, "eval", "-K", "3", "--forbidden-as-zero", "e[u] e[d]")
    assert code == 0
    assert json.loads(out)["species"] == "formal_sum"


def test_tables_markdown(capsys):
    code, out, _ = run(capsys, "tables", "--max-dim", "9", "--kind", "metric")
    assert code == 0
    assert "N mod 8" in out


def test_tables_csv_and_json(capsys):
    code, out, _ = run(
        capsys, "tables", "--max-dim", "9", "--kind", "commutation", "--format", "csv"
    )
    assert code == 0 and out.startswith("N,")
    code, out, _ = run(
        capsys,
        "tables",
        "--max-dim", "9",
        "--kind", "conjugation",
        "--km-min", "-1",
        "--km-max", "7",
        "--format", "json",
    )
    assert code == 0
    blob = json.loads(out)
    assert [r["difference"] for r in blob["conjugation"]] == list(range(-1, 8))


def test_decompose_round_trip(tmp_path, capsys):
    rep = build_representation(RepConfig(Signature(spacelike=4)))
    m = rep.gamma_chiral(1)
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps(m.to_json()))
    code, out, _ = run(capsys, "decompose", "-K", "4", "--input", str(path))
    assert code == 0
    blob = json.loads(out)
    assert blob == {"g1": {"re": ["1", "0"], "im": ["0", "0"]}}
    code, out, _ = run(
        capsys, "decompose", "-K", "4", "--input", str(path), "--basis", "outer"
    )
    assert code == 0
    assert len(json.loads(out)) == 2  # two outer products carry the chiral vector


def test_decompose_float_matrix(tmp_path, capsys):
    path = tmp_path / "float.json"
    path.write_text(json.dumps([[[0.0, 0.0], [1.5, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]))
    code, out, _ = run(capsys, "decompose", "-K", "2", "--input", str(path))
    assert code == 0
    blob = json.loads(out)
    assert set(blob) == {"g1"}


def test_classify_reflection(capsys):
    code, out, _ = run(capsys, "classify-reflection", "-K", "3", "-M", "1", "--generators", "4")
    assert code == 0 and out.strip() == "P"
    code, out, _ = run(
        capsys,
        "classify-reflection",
        "-K", "3",
        "--odd-mode", "embed-scalar-n",
        "--generators", "scalar",
    )
    assert code == 0 and out.strip() == "P"


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2
    # domain validation errors also map to exit code 2
    code, _, err = run(capsys, "build", "-K", "3", "--metric", "prime_standard")
    assert code == 2 and "prime" in err


def test_missing_input_file(capsys):
    code, _, err = run(capsys, "decompose", "-K", "2", "--input", "/nonexistent.json")
    assert code == 2 and err


def test_max_dim_env(capsys, monkeypatch):
    monkeypatch.setenv("SGA_MAX_DIM", "4")
    code, _, err = run(capsys, "build", "-K", "6")
    assert code == 2 and "SGA_MAX_DIM" in err
    monkeypatch.setenv("SGA_MAX_DIM", "8")
    code, _, _ = run(capsys, "build", "-K", "6")
    assert code == 0


def test_output_file(tmp_path, capsys):
    target = tmp_path / "rep.json"
    code, out, _ = run(capsys, "build", "-K", "2", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["dim"] == 2
