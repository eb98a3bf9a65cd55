"""CLI surface: documents, subcommands, exit codes, JSON output."""

import json
import math
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from cramerkit import certificate_from_dict, validate_certificate
from cramerkit.cli import (
    EXIT_FAIL,
    EXIT_GUARD,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_SINGULAR,
    InputDocument,
    InputError,
    main,
    parse_input_document,
)

REPO = Path(__file__).resolve().parents[1]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def rational_doc(rows, rhs):
    return {
        "n": len(rows),
        "mode": "rational",
        "A": [[str(x) for x in row] for row in rows],
        "b": [str(x) for x in rhs],
    }


# -- input documents -------------------------------------------------------------


def test_parse_accepts_strings_and_ints():
    doc = parse_input_document(
        {"n": 2, "mode": "rational", "A": [["1/2", 2], [-3, "4"]], "b": [0, "5"]}
    )
    assert doc.a_rows[0][0] == Fraction(1, 2)
    assert doc.a_rows[1][0] == Fraction(-3)
    assert doc.b == (Fraction(0), Fraction(5))


@pytest.mark.parametrize(
    "raw",
    [
        [],
        {"n": 2, "mode": "rational", "A": [["1", "1"]], "b": ["1", "1"]},
        {"n": 0, "mode": "rational", "A": [], "b": []},
        {"n": 1, "mode": "rational", "A": [["1"]], "b": ["1"], "extra": 1},
        {"n": 1, "mode": "decimal", "A": [["1"]], "b": ["1"]},
        {"n": 1, "mode": "rational", "A": [["1.5"]], "b": ["1"]},
        {"n": 1, "mode": "rational", "A": [[1.5]], "b": ["1"]},
        {"n": 1, "mode": "rational", "A": [["1/0"]], "b": ["1"]},
        {"n": 1, "mode": "rational", "A": [["1"]]},
        {"n": 1, "mode": "symbolic", "A": [["1"]], "b": ["1"]},
        {"n": 2, "mode": "rational", "A": [["1", "1"], ["1"]], "b": ["1", "1"]},
    ],
)
def test_parse_rejects_malformed(raw):
    with pytest.raises(InputError):
        parse_input_document(raw)


def test_document_roundtrip_by_value():
    raw = {"n": 2, "mode": "rational", "A": [["2/4", 2], [-3, "4"]], "b": [0, "5"]}
    doc = parse_input_document(raw)
    again = parse_input_document(doc.to_dict())
    assert again == doc
    assert again.to_dict() == doc.to_dict()


def test_symbolic_document_roundtrip():
    doc = parse_input_document({"n": 3, "mode": "symbolic"})
    assert doc == InputDocument(n=3, mode="symbolic", a_rows=None, b=None)
    assert parse_input_document(doc.to_dict()) == doc


# -- solve -----------------------------------------------------------------------


def test_solve_text(tmp_path, capsys):
    path = write_doc(tmp_path, "s.json", rational_doc([[1, 1], [1, -1]], [3, 1]))
    code, out, _ = run(capsys, "solve", "--input", path)
    assert code == EXIT_OK
    assert out.splitlines() == ["x1 = 2", "x2 = 1"]


def test_solve_json_covers_text(tmp_path, capsys):
    path = write_doc(tmp_path, "s.json", rational_doc([[1, 1], [1, -1]], [3, 1]))
    code, out, _ = run(capsys, "solve", "--input", path, "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["x"] == ["2", "1"]
    assert payload["numerators"] == ["-4", "-2"]
    assert payload["denominator"] == "-2"
    assert payload["mode"] == "rational"
    assert payload["n"] == 2


def test_solve_fractional_output(tmp_path, capsys):
    path = write_doc(tmp_path, "s.json", rational_doc([[3]], [2]))
    code, out, _ = run(capsys, "solve", "--input", path)
    assert code == EXIT_OK
    assert out.splitlines() == ["x1 = 2/3"]


def test_solve_symbolic(tmp_path, capsys):
    path = write_doc(tmp_path, "s.json", {"n": 2, "mode": "symbolic"})
    code, out, _ = run(capsys, "solve", "--input", path)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == (
        "x1 = (-a[1,2]*b[2] + a[2,2]*b[1]) / (a[1,1]*a[2,2] - a[1,2]*a[2,1])"
    )
    assert lines[1] == (
        "x2 = (a[1,1]*b[2] - a[2,1]*b[1]) / (a[1,1]*a[2,2] - a[1,2]*a[2,1])"
    )
    code, out, _ = run(capsys, "solve", "--input", path, "--json")
    payload = json.loads(out)
    assert payload["mode"] == "symbolic"
    assert payload["x"][0]["numerator"] == "-a[1,2]*b[2] + a[2,2]*b[1]"


def test_solve_singular_exit_code(tmp_path, capsys):
    path = write_doc(tmp_path, "s.json", rational_doc([[1, 1], [1, 1]], [1, 2]))
    code, _, err = run(capsys, "solve", "--input", path)
    assert code == EXIT_SINGULAR
    assert "singular system: X_0 = 0" in err


def test_solve_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = run(capsys, "solve", "--input", str(bad))
    assert code == EXIT_INPUT and "invalid JSON" in err
    code, _, err = run(capsys, "solve", "--input", str(tmp_path / "missing.json"))
    assert code == EXIT_INPUT
    path = write_doc(
        tmp_path, "f.json", {"n": 1, "mode": "rational", "A": [[0.5]], "b": ["1"]}
    )
    code, _, err = run(capsys, "solve", "--input", path)
    assert code == EXIT_INPUT


def test_solve_guard_and_override(tmp_path, capsys):
    n = 10
    doc = rational_doc([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                       list(range(1, n + 1)))
    path = write_doc(tmp_path, "big.json", doc)
    code, _, err = run(capsys, "solve", "--input", path)
    assert code == EXIT_GUARD and "guard" in err

    small = write_doc(
        tmp_path,
        "small.json",
        rational_doc([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
                     [1, 2, 3, 4]),
    )
    code, _, _ = run(capsys, "solve", "--input", small, "--max-n", "3")
    assert code == EXIT_GUARD
    code, out, _ = run(capsys, "solve", "--input", small, "--max-n", "4")
    assert code == EXIT_OK
    assert out.splitlines() == ["x1 = 1", "x2 = 2", "x3 = 3", "x4 = 4"]


# -- verify-identity ---------------------------------------------------------------


def test_verify_identity_all_rows(capsys):
    code, out, _ = run(capsys, "verify-identity", "--n", "3")
    assert code == EXIT_OK
    assert out.splitlines() == ["i=1: PASS", "i=2: PASS", "i=3: PASS"]


def test_verify_identity_single_row(capsys):
    code, out, _ = run(capsys, "verify-identity", "--n", "4", "--i", "2")
    assert code == EXIT_OK
    assert out.splitlines() == ["i=2: PASS"]


def test_verify_identity_bad_row(capsys):
    code, _, err = run(capsys, "verify-identity", "--n", "3", "--i", "5")
    assert code == EXIT_INPUT


def test_verify_identity_guard(capsys):
    code, _, _ = run(capsys, "verify-identity", "--n", "12")
    assert code == EXIT_GUARD


# -- check-involution ---------------------------------------------------------------


def test_check_involution_with_certificate(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    code, out, _ = run(
        capsys,
        "check-involution", "--n", "2", "--i", "1",
        "--emit-certificate", str(cert_path),
    )
    assert code == EXIT_OK
    assert "good=2 bad=2" in out
    assert out.count("PASS") == 6
    data = json.loads(cert_path.read_text(encoding="utf-8"))
    cert = certificate_from_dict(data)
    validate_certificate(cert)
    assert len(cert.good) == 2
    assert len(cert.bad_pairs) == 1


def test_check_involution_n1(capsys):
    code, out, _ = run(capsys, "check-involution", "--n", "1", "--i", "1")
    assert code == EXIT_OK
    assert "good=1 bad=0" in out


def test_check_involution_n4_counts(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    code, out, _ = run(
        capsys,
        "check-involution", "--n", "4", "--i", "3",
        "--emit-certificate", str(cert_path),
    )
    assert code == EXIT_OK
    assert "good=24 bad=72" in out
    data = json.loads(cert_path.read_text(encoding="utf-8"))
    assert len(data["good"]) == math.factorial(4)
    assert len(data["bad_pairs"]) == 36


def test_check_involution_unwritable_certificate(tmp_path, capsys):
    code, _, err = run(
        capsys,
        "check-involution", "--n", "2", "--i", "1",
        "--emit-certificate", str(tmp_path / "no_dir" / "cert.json"),
    )
    assert code == EXIT_FAIL
    assert "cannot write certificate" in err


def test_check_involution_bad_i(capsys):
    code, _, _ = run(capsys, "check-involution", "--n", "2", "--i", "3")
    assert code == EXIT_INPUT


# -- det -----------------------------------------------------------------------------


def test_det_all_methods_numeric(tmp_path, capsys):
    path = write_doc(tmp_path, "d.json", rational_doc([[2, 0], [0, 3]], [0, 0]))
    code, out, _ = run(capsys, "det", "--input", path)
    assert code == EXIT_OK
    assert out.splitlines() == ["leibniz: 6", "cofactor: 6", "bareiss: 6"]


def test_det_symbolic_methods_agree(tmp_path, capsys):
    path = write_doc(tmp_path, "d.json", {"n": 3, "mode": "symbolic"})
    code, out, _ = run(capsys, "det", "--input", path)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 2  # no bareiss for symbolic documents
    leibniz = lines[0].removeprefix("leibniz: ")
    cofactor = lines[1].removeprefix("cofactor: ")
    assert leibniz == cofactor
    assert leibniz.count(" + ") + leibniz.count(" - ") == 5  # 3! terms


def test_det_single_method(tmp_path, capsys):
    path = write_doc(tmp_path, "d.json", rational_doc([[0, 1], [1, 0]], [0, 0]))
    code, out, _ = run(capsys, "det", "--input", path, "--method", "bareiss")
    assert code == EXIT_OK
    assert out.splitlines() == ["bareiss: -1"]


def test_det_bareiss_on_symbolic_is_input_error(tmp_path, capsys):
    path = write_doc(tmp_path, "d.json", {"n": 2, "mode": "symbolic"})
    code, _, _ = run(capsys, "det", "--input", path, "--method", "bareiss")
    assert code == EXIT_INPUT


def test_det_cofactor_guard(tmp_path, capsys):
    n = 8
    doc = rational_doc(
        [[1 if i == j else 0 for j in range(n)] for i in range(n)], [0] * n
    )
    path = write_doc(tmp_path, "d.json", doc)
    code, _, _ = run(capsys, "det", "--input", path, "--method", "cofactor")
    assert code == EXIT_GUARD


def test_det_guard_default(tmp_path, capsys):
    path = write_doc(tmp_path, "d.json", {"n": 10, "mode": "symbolic"})
    code, _, _ = run(capsys, "det", "--input", path)
    assert code == EXIT_GUARD


# -- console entry -------------------------------------------------------------------


def test_module_entry_point(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(rational_doc([[1, 1], [1, -1]], [3, 1])))
    env = dict(os.environ)
    env["PYTHONPATH"] = str(REPO / "src") + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "cramerkit", "solve", "--input", str(path)],
        capture_output=True,
        text=True,
        env=env,
        cwd=str(tmp_path),
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["x1 = 2", "x2 = 1"]
