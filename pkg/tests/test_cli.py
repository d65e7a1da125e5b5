import json

import pytest

from negastab.cli import main
from negastab.fields import ExtField
from negastab.polyring import Poly, parse_poly
from negastab.construct import construct_code
from negastab.serialize import (load_spec, save_spec, spec_from_text,
                                spec_to_text)

F3 = ExtField(3)
F9 = ExtField(3, 2)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_factor_golden(capsys):
    code, out, _ = run(capsys, "factor", "--p", "3", "--k", "1", "--n", "10")
    assert code == 0
    for text in ("X^2+1", "X^4+X^3+2*X+1", "X^4+2*X^3+X+1"):
        assert text in out
    code, out, _ = run(capsys, "factor", "--p", "3", "--k", "2", "--n", "10",
                       "--format", "json")
    assert code == 0
    factors = json.loads(out)["factors"]
    assert len(factors) == 6  # four quadratics plus two linear ones
    assert sum(1 for f in factors if f["degree"] == 1) == 2


def test_factor_rejects_bad_length(capsys):
    code, _, err = run(capsys, "factor", "--p", "3", "--k", "1", "--n", "3")
    assert code == 2
    assert "gcd" in err


def test_construct_worked_example(tmp_path, capsys):
    out_file = tmp_path / "code.spec"
    code, out, _ = run(capsys, "construct", "--p", "3", "--n", "10",
                       "--k", "2", "--g", "X^2+1",
                       "--h", "X^4+(2e+1)*X^2+1", "--out", str(out_file))
    assert code == 0
    payload = json.loads(out)
    assert payload["params"] == "[[10,2,3]]_3"
    assert payload["linear"] is True
    assert all(payload["verification"].values())
    spec = load_spec(out_file)
    assert spec.n == 10 and spec.alpha == 2


def test_construct_rejections(capsys):
    code, _, err = run(capsys, "construct", "--p", "3", "--n", "10",
                       "--k", "2", "--g", "X^4+X^3+2*X+1",
                       "--h", "X^4+(2e+1)*X^2+1")
    assert code == 2 and "g(-X) = g(X)" in err
    code, _, err = run(capsys, "construct", "--p", "3", "--n", "10",
                       "--k", "2", "--g", "X^2+1", "--h", "X^2+(e+2)*X+2")
    assert code == 2 and "violated condition" in err


def test_spec_roundtrip(tmp_path):
    spec = construct_code(3, 10, 2, 1, parse_poly("X^2+1", F3),
                          parse_poly("X^4+(2e+1)*X^2+1", F9))
    text = spec_to_text(spec)
    again = spec_from_text(text)
    assert again == spec
    assert spec_to_text(again) == text
    # tampering with the companion is caught
    bad = text.replace("a: X^8", "a: 2*X^8")
    with pytest.raises(ValueError):
        spec_from_text(bad)


def test_search_small_and_cache_replay(tmp_path, capsys):
    args = ("search", "--p", "3", "--n-max", "4",
            "--cache-dir", str(tmp_path), "--format", "json")
    code, out1, _ = run(capsys, *args)
    assert code == 0
    rows = json.loads(out1)["rows"]
    assert all(r["d_bch"] < 3 for r in rows)  # nothing good this short
    code, out2, _ = run(capsys, *args)
    assert code == 0 and out2 == out1  # byte-identical replay
    assert (tmp_path / "results.jsonl").exists()


def test_search_raw_keeps_conjugate_specs(tmp_path, capsys):
    base = ("--p", "3", "--n-max", "10", "--cache-dir", str(tmp_path),
            "--format", "json")
    code, out, _ = run(capsys, "search", *base)
    dedup_rows = json.loads(out)["rows"]
    code, out, _ = run(capsys, "search", *base, "--raw")
    raw_rows = json.loads(out)["rows"]
    assert code == 0 and len(raw_rows) > len(dedup_rows)
    keys = {(r["n"], r["k_dim"], r["d_bch"], r["linear"]) for r in raw_rows}
    assert keys == {(r["n"], r["k_dim"], r["d_bch"], r["linear"])
                    for r in dedup_rows}


def test_report_dict_roundtrip(tmp_path):
    from negastab.construct import classify
    from negastab.serialize import report_from_dict, report_to_dict
    spec = construct_code(3, 10, 2, 1, parse_poly("X^2+1", F3),
                          parse_poly("X^4+(2e+1)*X^2+1", F9))
    report = classify(spec)
    rebuilt = report_from_dict(report_to_dict(report))
    assert rebuilt.spec == spec and rebuilt.table_key() == report.table_key()


def test_tables_diff_fails_when_rows_missing(tmp_path, capsys):
    code, out, err = run(capsys, "tables", "--p", "3", "--n-max", "10",
                         "--cache-dir", str(tmp_path), "--format", "json")
    assert code == 3  # most golden rows are out of range
    payload = json.loads(out)
    assert payload["golden"]["matched"] >= 1  # [[10,2,3]]_3 is in range
    assert "[[28,4,3]]_3*" in payload["golden"]["missing"]


def test_verify_cli(tmp_path, capsys):
    spec = construct_code(3, 10, 2, 1, parse_poly("X^2+1", F3),
                          parse_poly("X^4+(2e+1)*X^2+1", F9))
    path = tmp_path / "ok.spec"
    save_spec(spec, path)
    code, out, _ = run(capsys, "verify", "--spec", str(path),
                       "--nullspace-check")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["distance"]["true_minimum"] == 3
    assert payload["sizes"]["S"] == 3 ** 8
    assert payload["nullspace"]["dimension"] == 12
    assert all(payload["dual_ideal"].values())
    # budget refusal
    code, _, err = run(capsys, "verify", "--spec", str(path),
                       "--budget", "100")
    assert code == 4 and "budget" in err


def test_verify_rejects_tampered_spec(tmp_path, capsys):
    spec = construct_code(3, 10, 2, 1, parse_poly("X^2+1", F3),
                          parse_poly("X^4+(2e+1)*X^2+1", F9))
    path = tmp_path / "bad.spec"
    text = spec_to_text(spec).replace("h: X^4+(2e+1)*X^2+1",
                                      "h: X^2+(e+2)*X+2")
    path.write_text(text)
    code, _, err = run(capsys, "verify", "--spec", str(path))
    assert code == 2


def test_simulate_cli(tmp_path, capsys):
    spec = construct_code(3, 4, 3, 1, Poly.x_pow_n_plus_one(F3, 4),
                          Poly.one(ExtField(3, 3)))
    path = tmp_path / "sim.spec"
    save_spec(spec, path)
    code, out, _ = run(capsys, "simulate", "--spec", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert abs(payload["trace_real"] - 81) < 1e-6
    # dimension refusal on a big spec
    big = construct_code(3, 10, 2, 1, parse_poly("X^2+1", F3),
                         parse_poly("X^4+(2e+1)*X^2+1", F9))
    big_path = tmp_path / "big.spec"
    save_spec(big, big_path)
    code, _, err = run(capsys, "simulate", "--spec", str(big_path))
    assert code == 4


def test_markdown_and_csv_formats(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "--p", "3", "--n-max", "10",
                       "--cache-dir", str(tmp_path), "--format", "markdown")
    assert code == 0
    assert "| Length | Parameters |" in out
    assert "[[10,2,3]]_3" in out
    code, out, _ = run(capsys, "search", "--p", "3", "--n-max", "10",
                       "--cache-dir", str(tmp_path), "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "p,n,k_dim,d_bch,linear,params"
