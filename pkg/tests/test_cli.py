from __future__ import annotations

import io
import json

import pytest

from ctk import canonical_tree_code, degrees, modified_connection_zagreb
from ctk.cli import main, parse_edge_document, serialize_edge_document
from conftest import path_graph, star_graph


def run_cli(argv, capsys, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# edge-list documents
# ----------------------------------------------------------------------

def test_parse_edge_document_basic() -> None:
    g = parse_edge_document("# a comment\nn=4\n0 1\n1 2\n2 3\n")
    assert g is not None
    assert g.n == 4
    assert degrees(g) == (1, 2, 2, 1)


def test_parse_edge_document_without_header() -> None:
    g = parse_edge_document("0 1\n0 2\n")
    assert g is not None
    assert g.n == 3


def test_parse_edge_document_empty_returns_none() -> None:
    assert parse_edge_document("") is None
    assert parse_edge_document("# only comments\n\n") is None


def test_parse_edge_document_errors_carry_line_numbers() -> None:
    with pytest.raises(ValueError, match="line 4"):
        parse_edge_document("# c\nn=3\n0 1\n1 x\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_document("0 1\n0 1\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_document("n=zebra\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_edge_document("n=2\n0 1\n0 5\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_document("3 3\n")


def test_serialize_round_trip() -> None:
    g = star_graph(5)
    text = serialize_edge_document(g)
    assert text == "n=5\n0 1\n0 2\n0 3\n0 4\n"
    again = parse_edge_document(text)
    assert again == g


# ----------------------------------------------------------------------
# compute
# ----------------------------------------------------------------------

def test_compute_from_file(tmp_path, capsys) -> None:
    doc = tmp_path / "g.txt"
    doc.write_text(serialize_edge_document(star_graph(5)))
    code, out, err = run_cli(["compute", str(doc)], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["n"] == 5
    assert record["zc1star"] == 12
    assert record["degree_counts"] == {"1": 4, "4": 1}


def test_compute_from_stdin(capsys, monkeypatch) -> None:
    code, out, err = run_cli(
        ["compute", "-"], capsys, stdin_text="0 1\n1 2\n", monkeypatch=monkeypatch
    )
    assert code == 0
    record = json.loads(out)
    assert record["n"] == 3
    assert record["m1"] == 6


def test_compute_levelseq_multiline(capsys, monkeypatch) -> None:
    code, out, err = run_cli(
        ["compute", "--format", "levelseq", "-"],
        capsys,
        stdin_text="0 1 2 1 2\n\n0 1 1 1 1\n",
        monkeypatch=monkeypatch,
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["zc1star"] for r in records] == [10, 12]
    assert records[0]["tau"] == [2, 1, 1, 1, 1]


def test_compute_parse_failure_exits_2_with_line(capsys, monkeypatch) -> None:
    code, out, err = run_cli(
        ["compute", "-"],
        capsys,
        stdin_text="# c\nn=3\n0 1\n1 x\n",
        monkeypatch=monkeypatch,
    )
    assert code == 2
    assert "line 4" in err
    assert out == ""


def test_compute_levelseq_failure_names_line(capsys, monkeypatch) -> None:
    code, out, err = run_cli(
        ["compute", "--format", "levelseq", "-"],
        capsys,
        stdin_text="0 1 1\n0 7 1\n",
        monkeypatch=monkeypatch,
    )
    assert code == 2
    assert "line 2" in err


def test_compute_empty_input_is_quiet(capsys, monkeypatch) -> None:
    code, out, err = run_cli(
        ["compute", "-"], capsys, stdin_text="# nothing\n", monkeypatch=monkeypatch
    )
    assert code == 0
    assert out == ""


def test_compute_missing_file_exits_nonzero(capsys) -> None:
    code, out, err = run_cli(["compute", "/nonexistent/input.txt"], capsys)
    assert code == 1
    assert "error:" in err


# ----------------------------------------------------------------------
# enumerate
# ----------------------------------------------------------------------

def test_enumerate_stdout(capsys) -> None:
    code, out, err = run_cli(["enumerate", "--n", "6"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0] == "0 1 2 3 1 2"
    assert err.strip() == "5"


def test_enumerate_to_file(tmp_path, capsys) -> None:
    target = tmp_path / "codes.txt"
    code, out, err = run_cli(["enumerate", "--n", "7", "-o", str(target)], capsys)
    assert code == 0
    assert out.strip() == "9"
    assert len(target.read_text().splitlines()) == 9


def test_enumerate_max_degree_flag(capsys) -> None:
    code, out, err = run_cli(["enumerate", "--n", "6", "--max-degree", "5"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 6


def test_enumerate_guard(capsys) -> None:
    code, out, err = run_cli(["enumerate", "--n", "15"], capsys)
    assert code == 2
    assert "scale guard" in err
    assert "--force" in err


def test_enumerate_force(capsys) -> None:
    code, out, err = run_cli(["enumerate", "--n", "15", "--force"], capsys)
    assert code == 0
    assert len(out.splitlines()) == 4347


def test_enumerate_env_guard_override(capsys, monkeypatch) -> None:
    monkeypatch.setenv("CTK_SCALE_GUARD", "15")
    code, out, err = run_cli(["enumerate", "--n", "15"], capsys)
    assert code == 0


def test_enumerate_rejects_bad_n(capsys) -> None:
    code, out, err = run_cli(["enumerate", "--n", "0"], capsys)
    assert code == 2


# ----------------------------------------------------------------------
# extremal
# ----------------------------------------------------------------------

def test_extremal_max_with_closed_form(capsys) -> None:
    code, out, err = run_cli(
        ["extremal", "--n", "9", "--objective", "zc1star", "--direction", "max"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["value"] == 50
    assert record["closed_form"] == 50
    assert record["agreement"] is True
    assert record["witnesses"] == ["0 1 2 2 2 1 2 1 1"]


def test_extremal_min_with_closed_form(capsys) -> None:
    code, out, err = run_cli(
        ["extremal", "--n", "8", "--objective", "zc1star", "--direction", "min"],
        capsys,
    )
    record = json.loads(out)
    assert record["value"] == 22
    assert record["agreement"] is True


def test_extremal_small_order_no_closed_form(capsys) -> None:
    code, out, err = run_cli(
        ["extremal", "--n", "4", "--objective", "zc1star", "--direction", "max"],
        capsys,
    )
    assert code == 0
    record = json.loads(out)
    assert record["value"] == 6
    assert len(record["witnesses"]) == 2
    assert "closed_form" not in record


def test_extremal_other_objective(capsys) -> None:
    code, out, err = run_cli(
        ["extremal", "--n", "6", "--objective", "m2", "--direction", "max"],
        capsys,
    )
    record = json.loads(out)
    assert "closed_form" not in record
    assert record["objective"] == "m2"


def test_extremal_requires_objective_and_direction(capsys) -> None:
    code, out, err = run_cli(["extremal", "--n", "6"], capsys)
    assert code == 2


def test_extremal_guard(capsys) -> None:
    code, out, err = run_cli(
        ["extremal", "--n", "15", "--objective", "zc1star", "--direction", "min"],
        capsys,
    )
    assert code == 2


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def test_verify_default_reports_refuted_claims(capsys) -> None:
    code, out, err = run_cli(["verify"], capsys)
    assert code == 1
    assert "result: FAIL" in out
    assert out.count("[FAIL]") == 9


def test_verify_filtered_checks_pass(capsys) -> None:
    code, out, err = run_cli(
        ["verify", "--n-max", "7", "--checks", "identity,table1,degree-system"],
        capsys,
    )
    assert code == 0
    assert "result: PASS" in out


def test_verify_rejects_small_n_max(capsys) -> None:
    code, out, err = run_cli(["verify", "--n-max", "4"], capsys)
    assert code == 2


def test_verify_rejects_unknown_check(capsys) -> None:
    code, out, err = run_cli(["verify", "--checks", "sparkle"], capsys)
    assert code == 2


def test_verify_random_flag(capsys) -> None:
    code, out, err = run_cli(
        ["verify", "--n-max", "5", "--checks", "identity", "--random", "--seed", "3"],
        capsys,
    )
    assert code == 0
    assert "random=on seed=3" in out


def test_verify_deterministic_output(capsys) -> None:
    code1, out1, _ = run_cli(["verify", "--n-max", "10"], capsys)
    code2, out2, _ = run_cli(["verify", "--n-max", "10"], capsys)
    assert code1 == code2 == 1
    assert out1 == out2


# ----------------------------------------------------------------------
# construct
# ----------------------------------------------------------------------

def test_construct_star(capsys) -> None:
    code, out, err = run_cli(["construct", "--family", "star", "--n", "5"], capsys)
    assert code == 0
    assert out == "n=5\n0 1\n0 2\n0 3\n0 4\n"


def test_construct_families_compute_round_trip(capsys, monkeypatch) -> None:
    for family, n, want in (("ct1", 7, 30), ("ct2", 8, 42), ("ct0", 9, 50)):
        code, out, err = run_cli(["construct", "--family", family, "--n", str(n)], capsys)
        assert code == 0
        g = parse_edge_document(out)
        assert g is not None
        assert modified_connection_zagreb(g) == want


def test_construct_residue_mismatch_exits_2(capsys) -> None:
    code, out, err = run_cli(["construct", "--family", "ct1", "--n", "9"], capsys)
    assert code == 2
    assert "error:" in err


def test_construct_rejects_unknown_family(capsys) -> None:
    code, out, err = run_cli(["construct", "--family", "wheel", "--n", "6"], capsys)
    assert code == 2


def test_construct_path_matches_canonical_code(capsys) -> None:
    code, out, err = run_cli(["construct", "--family", "path", "--n", "6"], capsys)
    g = parse_edge_document(out)
    assert g is not None
    assert canonical_tree_code(g) == canonical_tree_code(path_graph(6))


# ----------------------------------------------------------------------
# top level
# ----------------------------------------------------------------------

def test_unknown_subcommand_exits_2(capsys) -> None:
    code, out, err = run_cli(["transmogrify"], capsys)
    assert code == 2


def test_no_arguments_exits_2(capsys) -> None:
    code, out, err = run_cli([], capsys)
    assert code == 2
