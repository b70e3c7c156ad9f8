"""End-to-end runs of the command line interface."""

import pytest

from graphalg import cli
from graphalg.cli import main


@pytest.fixture
def el2_file(tmp_path):
    path = tmp_path / "el2.g"
    assert main(["generate", "--family", "eL", "--param", "2", "-o", str(path)]) == 0
    return path


def test_no_command_is_usage_error(capsys):
    assert main([]) == 1
    assert "usage error" in capsys.readouterr().err


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 1


def test_generate_to_stdout(capsys):
    assert main(["generate", "--family", "eA", "--param", "2"]) == 0
    out = capsys.readouterr().out
    assert out == "vertex {1}\nvertex {2}\nvertex {1,2}\nedge {1} {1,2}\nedge {2} {1,2}\n"


def test_generate_writes_file(el2_file):
    text = el2_file.read_text()
    assert text.startswith("vertex {1}\n")
    assert "edge {1,2} {1,2}" in text


def test_generate_rejects_symbolic_param(capsys):
    assert main(["generate", "--family", "eA", "--param", "aleph0"]) == 1
    assert "integer" in capsys.readouterr().err


def test_generate_cap_exceeded(capsys):
    assert main(["generate", "--family", "eA", "--param", "10"]) == 3
    assert "cap exceeded" in capsys.readouterr().err


def test_unknown_family(capsys):
    assert main(["generate", "--family", "eZ", "--param", "2"]) == 1
    assert "unknown family" in capsys.readouterr().err


def test_bad_param_token(capsys):
    assert main(["symbolic", "--family", "eA", "--param", "huge"]) == 1


def test_analyze_file(el2_file, capsys):
    assert main(["analyze", str(el2_file)]) == 0
    out = capsys.readouterr().out
    assert out.startswith(f"format 1\ngraph {el2_file}\n")
    assert "condition_l no" in out
    assert "lpa_prime yes" in out
    assert "witness condition_l cycle without exit: {1,2} -> {1,2}" in out


def test_analyze_missing_file(capsys):
    assert main(["analyze", "/definitely/not/here.g"]) == 1
    assert "cannot read" in capsys.readouterr().err


def test_analyze_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("vertex a\nedge a zz\n")
    assert main(["analyze", str(bad)]) == 2
    assert "parse error: line 2" in capsys.readouterr().err


def test_lattice_counts(tmp_path, capsys):
    path = tmp_path / "fix.g"
    path.write_text("vertex v\nvertex w\nedge v w xinf\nedge v v\n")
    assert main(["lattice", str(path)]) == 0
    out = capsys.readouterr().out
    assert "saturated_hereditary 3" in out
    assert "admissible_pairs 4" in out
    assert "maximal_proper 1" in out
    assert "maximal ({w},{v})" in out


def test_lattice_dot(el2_file, capsys):
    assert main(["lattice", str(el2_file), "--dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph admissible_pairs {")


def test_lattice_cap(tmp_path, capsys):
    wide = tmp_path / "wide.g"
    wide.write_text("".join(f"vertex v{i}\n" for i in range(25)))
    assert main(["lattice", str(wide)]) == 3
    assert "cap exceeded" in capsys.readouterr().err
    small = tmp_path / "small.g"
    small.write_text("vertex a\nvertex b\nedge a b\n")
    assert main(["lattice", str(small), "--max-vertices", "1"]) == 3
    assert main(["lattice", str(small)]) == 0


def test_symbolic_includes_ideal_count(capsys):
    assert main(["symbolic", "--family", "eK", "--param", "uncountable"]) == 0
    out = capsys.readouterr().out
    assert "family eK" in out
    assert "param uncountable" in out
    assert "maximal_ideal_cardinality uncountable" in out


def test_symbolic_omits_undefined_ideal_count(capsys):
    assert main(["symbolic", "--family", "eP", "--param", "uncountable"]) == 0
    out = capsys.readouterr().out
    assert "maximal_ideal_cardinality" not in out
    assert "cstar_primitive yes" in out


def test_symbolic_ekappa(capsys):
    assert main(["symbolic", "--family", "eKappa", "--param", "non-cofinal-omega"]) == 0
    out = capsys.readouterr().out
    assert "cstar_prime yes" in out
    assert "cstar_primitive no" in out
    assert "af yes" in out


def test_check_single_file(el2_file, capsys):
    assert main(["check", str(el2_file)]) == 0
    assert "checked 1 graphs: 0 violations" in capsys.readouterr().out


def test_check_directory(tmp_path, capsys):
    (tmp_path / "a.g").write_text("vertex a\nedge a a\n")
    (tmp_path / "b.g").write_text("vertex a\nvertex b\nedge a b x2\n")
    assert main(["check", str(tmp_path)]) == 0
    assert "checked 2 graphs: 0 violations" in capsys.readouterr().out


def test_check_empty_directory(tmp_path, capsys):
    assert main(["check", str(tmp_path)]) == 1
    assert "no .g files" in capsys.readouterr().err


def test_check_builtin_corpus_sample(capsys):
    assert main(["check", "--random-count", "40", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "0 violations" in out


def test_check_reports_violations(monkeypatch, tmp_path, capsys):
    (tmp_path / "a.g").write_text("vertex a\n")
    monkeypatch.setattr(cli, "run_checks", lambda entries: ["fault: synthetic"])
    assert main(["check", str(tmp_path)]) == 4
    out = capsys.readouterr().out
    assert "fault: synthetic" in out
    assert "1 violations" in out
