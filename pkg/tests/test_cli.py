"""Command line driver: exit codes, rendered output, document emission."""

import json

import pytest

from dpoisson.cli import main
from dpoisson.textio import format_document, parse_document

from conftest import FIXDIR


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    cap = capsys.readouterr()
    return code, cap.out, cap.err


# -- check ----------------------------------------------------------------


def test_check_pass_exits_zero(capsys):
    code, out, err = run(capsys, "check", FIXDIR / "f1.dbr")
    assert code == 0
    assert "check bracket B (max-len 3)" in out
    assert "result: PASS" in out
    assert err == ""


def test_check_fail_exits_one(capsys):
    code, out, _ = run(capsys, "check", FIXDIR / "fail_antisym.dbr")
    assert code == 1
    assert "antisymmetry: FAIL at (x, x)  residual: 2 * x (*) x" in out


def test_check_malformed_exits_two(capsys):
    code, out, err = run(capsys, "check", FIXDIR / "malformed.dbr")
    assert code == 2
    assert err.startswith("error: line 4")


def test_check_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "check", FIXDIR / "no_such.dbr")
    assert code == 2
    assert "cannot read" in err


def test_check_dlr_document(capsys):
    code, out, _ = run(capsys, "check", FIXDIR / "koszul_f2.dbr")
    assert code == 0
    assert "check dlr K (max-len 3)" in out
    for cond in ["a-antisymmetry", "anchor-properties", "b-derivation-compat",
                 "c-anchor-jacobi", "d-double-jacobi"]:
        assert f"{cond}: PASS" in out


def test_check_broken_dlr_signatures(capsys):
    code, out, _ = run(capsys, "check", FIXDIR / "flipped_anchor.dbr")
    assert code == 1
    assert "c-anchor-jacobi: FAIL at (x, dx, dx)" in out
    code, out, _ = run(capsys, "check", FIXDIR / "dropped_term.dbr")
    assert code == 1
    assert "a-antisymmetry: FAIL at (dx, dx)" in out


def test_check_json_format(capsys):
    code, out, _ = run(capsys, "check", FIXDIR / "zero.dbr", "--format", "json", "--no-time")
    assert code == 0
    body = json.loads(out)
    assert body["result"] == "pass"
    assert body["max_len"] == 3
    assert body["reports"][0]["subject"] == "dlr ZERO"
    assert all("wall_time" not in r for r in body["reports"])


def test_check_max_len_flag(capsys):
    code, out, _ = run(capsys, "check", FIXDIR / "f1.dbr", "--max-len", "1")
    assert code == 0
    assert "(max-len 1)" in out


def test_check_empty_document(capsys, tmp_path):
    p = tmp_path / "only.dbr"
    p.write_text("algebra A {\n  shift = 0\n  gens = [ x:0 ]\n}\n")
    code, out, _ = run(capsys, "check", p)
    assert code == 0
    assert "nothing to check" in out


# -- evaluation commands --------------------------------------------------


def test_eval_pinned_example(capsys):
    code, out, _ = run(capsys, "eval", FIXDIR / "f1.dbr", "--bracket", "B", "x", "y.x")
    assert code == 0
    assert out.strip() == "1 (*) x"


def test_eval_unknown_bracket(capsys):
    code, _, err = run(capsys, "eval", FIXDIR / "f1.dbr", "--bracket", "NOPE", "x", "y")
    assert code == 2
    assert "no bracket named 'NOPE'" in err


def test_eval_malformed_word(capsys):
    code, _, err = run(capsys, "eval", FIXDIR / "f1.dbr", "--bracket", "B", "x..y", "y")
    assert code == 2
    assert "malformed word 'x..y'" in err


def test_jacobiator_zero_and_nonzero(capsys):
    code, out, _ = run(capsys, "jacobiator", FIXDIR / "f2.dbr", "--bracket", "F2",
                       "x", "x", "x")
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(capsys, "jacobiator", FIXDIR / "fail_jacobi.dbr", "--bracket", "BAD",
                       "x", "x", "y")
    assert code == 0
    assert out.strip() == "- x (*) x (*) y"


def test_jacobiator_unknown_generator(capsys):
    code, _, err = run(capsys, "jacobiator", FIXDIR / "f2.dbr", "--bracket", "F2",
                       "x", "z", "x")
    assert code == 2
    assert "unknown generator 'z'" in err


def test_leibniz_output(capsys):
    code, out, _ = run(capsys, "leibniz", FIXDIR / "f1.dbr", "--bracket", "B", "x", "x.y")
    assert code == 0
    assert out.strip() == "x"


def test_necklace_output(capsys):
    code, out, _ = run(capsys, "necklace", FIXDIR / "f1.dbr", "--bracket", "B", "x", "y")
    assert code == 0
    assert out.strip() == "[1]"


# -- constructions --------------------------------------------------------


def test_koszul_output_reparses_and_passes(capsys, tmp_path):
    out_path = tmp_path / "k.dbr"
    code, _, _ = run(capsys, "koszul", FIXDIR / "f2.dbr", "--bracket", "F2",
                     "-o", out_path)
    assert code == 0
    text = out_path.read_text()
    doc = parse_document(text)
    assert format_document(doc) == text
    assert "koszul_F2" in doc.dlrs
    code, out, _ = run(capsys, "check", out_path)
    assert code == 0


def test_koszul_guard_exits_one(capsys, tmp_path):
    code, _, err = run(capsys, "koszul", FIXDIR / "fail_jacobi.dbr", "--bracket", "BAD",
                       "-o", tmp_path / "x.dbr")
    assert code == 1
    assert "input is not double Poisson" in err


def test_sn_output_reparses(capsys, tmp_path):
    out_path = tmp_path / "sn.dbr"
    code, _, _ = run(capsys, "sn", FIXDIR / "f1.dbr", "--algebra", "A", "-o", out_path)
    assert code == 0
    text = out_path.read_text()
    doc = parse_document(text)
    assert format_document(doc) == text
    spec = doc.brackets["sn_A"]
    amb = spec.algebra
    assert spec.eval_words(amb.word("Dx"), amb.word("x")).render() == "1 (*) 1"


def test_shift_round_trip_is_textual_identity(capsys, tmp_path):
    up = tmp_path / "up.dbr"
    back = tmp_path / "back.dbr"
    code, _, _ = run(capsys, "shift", FIXDIR / "koszul_f2.dbr", "--dlr", "K",
                     "--delta", "2", "-o", up)
    assert code == 0
    code, _, _ = run(capsys, "shift", up, "--dlr", "K", "--delta", "-2", "-o", back)
    assert code == 0
    assert back.read_text() == (FIXDIR / "koszul_f2.dbr").read_text()


def test_shift_zero_delta_renormalizes(capsys, tmp_path):
    out_path = tmp_path / "same.dbr"
    code, _, _ = run(capsys, "shift", FIXDIR / "idempotent.dbr", "--dlr", "IDEM",
                     "--delta", "0", "-o", out_path)
    assert code == 0
    assert out_path.read_text() == (FIXDIR / "idempotent.dbr").read_text()


def test_shift_unknown_dlr(capsys, tmp_path):
    code, _, err = run(capsys, "shift", FIXDIR / "koszul_f2.dbr", "--dlr", "NOPE",
                       "--delta", "1", "-o", tmp_path / "x.dbr")
    assert code == 2
    assert "no dlr named 'NOPE'" in err


def test_verify_shift_pass(capsys):
    code, out, _ = run(capsys, "verify-shift", FIXDIR / "koszul_f2.dbr",
                       "--dlr", "K", "--delta", "-2")
    assert code == 0
    assert "shift-equivalence (delta -2)" in out
    assert "result: PASS" in out


def test_verify_shift_broken_data_still_equivalent(capsys):
    # equivalence compares verdict vectors; failing data that fails the
    # same way on both sides is a pass
    code, out, _ = run(capsys, "verify-shift", FIXDIR / "flipped_anchor.dbr",
                       "--dlr", "KBAD", "--delta", "1")
    assert code == 0
    assert "result: PASS" in out
