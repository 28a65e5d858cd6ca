import json

import pandas as pd
import pytest

from src.logic.bench import CSV_COLUMNS
from src.logic.dnf_format import load_dnf, parse_dnf
from src.main import main

PHI5 = "vars: 5\n" + "".join(
    f"{a} {b} {c}\n"
    for a in range(1, 6) for b in range(a + 1, 6) for c in range(b + 1, 6)
)


@pytest.fixture()
def formulas(dnf_file):
    return {
        "phi5": dnf_file("phi5.dnf", PHI5),
        "and2": dnf_file("and2.dnf", "vars: 2\n1 2\n"),
        "or2": dnf_file("or2.dnf", "# OR\nvars: 2\n1\n2\n"),
        "g3": dnf_file("g3.dnf", "vars: 3\n1 2\n1 3\n2 3\n"),
        "broken": dnf_file("broken.dnf", "vars: 2\n1 3\n"),
        "chain": dnf_file("chain.dnf", "vars: 2\n1\n1 2\n"),
    }


def test_gen_majority_writes_file(tmp_path, capsys):
    out = tmp_path / "phi5.dnf"
    assert main(["gen", "majority", "--n", "5", "-o", str(out)]) == 0
    assert len(out.read_text().strip().splitlines()) == 1 + 10
    assert load_dnf(out).num_vars == 5
    assert "10 implicants" in capsys.readouterr().out


def test_gen_majority_to_stdout(capsys):
    assert main(["gen", "majority", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith("# implicants: 3")
    assert len(parse_dnf(out)) == 3


def test_gen_even_n_is_input_error(capsys):
    assert main(["gen", "majority", "--n", "4"]) == 2
    assert "odd" in capsys.readouterr().err


def test_self_dual_json_trace(formulas, capsys):
    assert main(["self-dual", formulas["phi5"], "--seed", "7", "--json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["final"]["answer"] is True
    assert document["config"]["seed"] == 7
    assert [step["index"] for step in document["steps"]] == [1, 2, 3, 4, 5]


def test_self_dual_json_is_byte_identical(formulas, capsys):
    main(["self-dual", formulas["phi5"], "--seed", "7", "--json"])
    first = capsys.readouterr().out
    main(["self-dual", formulas["phi5"], "--seed", "7", "--json"])
    assert capsys.readouterr().out == first


def test_self_dual_false_prints_reason(formulas, capsys):
    assert main(["self-dual", formulas["and2"]]) == 1
    out = capsys.readouterr().out
    assert out.startswith("answer: False (")


@pytest.mark.parametrize("name", ["broken", "chain"])
def test_self_dual_bad_file_exits_2(formulas, name, capsys):
    assert main(["self-dual", formulas[name]]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_self_dual_invalid_utf8_exits_2(tmp_path, capsys):
    path = tmp_path / "latin.dnf"
    path.write_bytes(b"vars: 2\n1 \xff\n")
    assert main(["self-dual", str(path)]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_self_dual_missing_file_exits_2(tmp_path, capsys):
    assert main(["self-dual", str(tmp_path / "nope.dnf")]) == 2
    assert "error:" in capsys.readouterr().err


def test_minimize_flag_strips_supersets(formulas):
    # reduces to the dictator x1, which is self-dual
    assert main(["self-dual", formulas["chain"], "--minimize"]) == 0


def test_classical_method(formulas, capsys):
    assert main(["self-dual", formulas["and2"], "--method", "classical", "--json"]) == 1
    document = json.loads(capsys.readouterr().out)
    assert document["method"] == "classical"
    assert document["final"]["reason"] == "WitnessFound"
    assert document["final"]["witness"] == 1


def test_both_methods_report_cross_validation(formulas, capsys):
    assert main(["self-dual", formulas["phi5"], "--method", "both", "--json"]) == 0
    captured = capsys.readouterr()
    document = json.loads(captured.out)
    assert document["cross_validation"]["classification"] == "agree"
    assert "defect" not in captured.err


def test_classical_cap_enforced(formulas, monkeypatch):
    monkeypatch.setattr("src.config.CLASSICAL_ARITY_CAP", 4)
    assert main(["self-dual", formulas["phi5"], "--method", "both"]) == 2


@pytest.mark.parametrize("route", ["direct", "reduction"])
def test_dual_exit_codes(formulas, route):
    assert main(["dual", formulas["and2"], formulas["or2"], "--route", route]) == 0
    assert main(["dual", formulas["and2"], formulas["and2"], "--route", route]) == 1


def test_dual_arity_mismatch(formulas, capsys):
    assert main(["dual", formulas["phi5"], formulas["g3"]]) == 2
    assert "arity mismatch" in capsys.readouterr().err


def test_dual_intersection_witness_text(formulas, capsys):
    assert main(["dual", formulas["or2"], formulas["or2"]]) == 1
    out = capsys.readouterr().out
    assert "IntersectionViolated" in out
    assert "disjoint implicants: [1] and [2]" in out


def test_bench_writes_csv(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    code = main([
        "bench", "--n-min", "3", "--n-max", "4", "--instances", "3",
        "--seed", "2", "--workers", "2", "-o", str(out),
    ])
    assert code == 0
    df = pd.read_csv(out)
    assert list(df.columns) == CSV_COLUMNS
    assert len(df) == 6
    report = capsys.readouterr().out
    assert "generator:" in report
    assert "mean_grover_queries" in report


def test_bench_invalid_range(capsys):
    assert main(["bench", "--n-min", "5", "--n-max", "4"]) == 2
