"""CLI subcommands: outputs, file handling, and the exit-code contract."""

from __future__ import annotations

import csv
import json

import pytest

from orbitcayley.cli import EXIT_OK, EXIT_USAGE, emit_table1, main


def test_spectrum_json(capsys):
    assert main(["spectrum", "--set", "n=4;I=1,4"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 4
    assert payload["entries"][0] == {"k": 0, "value": 5, "multiplicity": 1}


def test_spectrum_distinct_csv_with_oracle(capsys):
    assert main(["spectrum", "--set", "n=4;I=1,4", "--distinct", "--check-oracle"]) == EXIT_OK
    assert capsys.readouterr().out == "value,multiplicity\n5,1\n1,10\n-3,5\n"


def test_spectrum_oracle_cap_is_usage_error(capsys):
    code = main(["spectrum", "--set", "n=4;I=1", "--check-oracle", "--wht-cap", "3"])
    assert code == EXIT_USAGE


def test_srg_check_json(capsys):
    assert main(["srg-check", "--set", "n=4;I=1,4", "--explicit"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["set"] == "n=4;I=1,4"
    assert payload["status"] == "nontrivial_srg"
    assert payload["params"] == {"vertices": 16, "degree": 5, "lambda": 0, "mu": 2}
    assert payload["families"] == ["s0s1@4m"]


def test_srg_check_disconnected_still_exits_zero(capsys):
    assert main(["srg-check", "--set", "n=4;I=2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "disconnected"
    assert payload["params"] is None


def test_malformed_set_is_usage_error(capsys):
    assert main(["srg-check", "--set", "garbage"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_unknown_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["census", "--bogus"])
    assert exc.value.code == EXIT_USAGE


def test_census_jsonl_and_csv(tmp_path):
    jsonl = tmp_path / "census.jsonl"
    assert main(["census", "--n", "3..4", "--out", str(jsonl)]) == EXIT_OK
    lines = jsonl.read_text().splitlines()
    assert len(lines) == 7 + 15
    first = json.loads(lines[0])
    assert first["n"] == 3 and first["I"] == [1]

    out = tmp_path / "census.csv"
    assert main(["census", "--n", "4", "--format", "csv", "--out", str(out)]) == EXIT_OK
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["n", "I", "connected", "distinct", "verdict", "r", "lambda", "mu"]
    assert rows[1] == ["4", "1", "true", "5", "not_srg", "", "", ""]
    by_set = {row[1]: row for row in rows[1:]}
    assert by_set["1,4"] == ["4", "1,4", "true", "3", "nontrivial_srg", "5", "0", "2"]


def test_census_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["census", "--n", "5", "--out", str(a)]) == EXIT_OK
    assert main(["census", "--n", "5", "--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_census_bad_range_is_usage_error(capsys):
    assert main(["census", "--n", "0"]) == EXIT_USAGE
    assert main(["census", "--n", "13"]) == EXIT_USAGE
    assert main(["census", "--n", "5..4"]) == EXIT_USAGE


def test_cap_invariants_are_usage_errors(capsys):
    assert main(["census", "--n", "4", "--explicit-cap", "15"]) == EXIT_USAGE
    assert main(["spectrum", "--set", "n=4;I=1", "--wht-cap", "30"]) == EXIT_USAGE
    assert main(["srg-check", "--set", "n=4;I=1", "--explicit-cap", "15"]) == EXIT_USAGE


def test_families_table(capsys):
    assert main(["families", "--m-max", "2"]) == EXIT_OK
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ["graph", "n_vertices", "r", "lambda", "mu", "verified"]
    assert len(rows) == 1 + 12
    assert all(row[5] == "yes" for row in rows[1:])
    table = {(row[0]): tuple(int(x) for x in row[1:5]) for row in rows[1:]}
    assert table["Cay(Z2^4,S0+S1)"] == (16, 5, 0, 2)
    assert table["Cay(Z2^6,S0+S3)"] == (64, 35, 18, 20)
    assert table["Cay(Z2^10,S2+S3)"] == (1024, 496, 240, 240)


def test_families_skip_beyond_cap(capsys):
    assert main(["families", "--m-max", "6", "--check-cap", "10"]) == EXIT_OK
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    skipped = [row for row in rows[1:] if row[5] == "skipped"]
    assert skipped and all(int(row[1]) > 1 << 10 for row in skipped)


def test_identities_report(capsys):
    assert main(["identities", "--max-m", "3"]) == EXIT_OK
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ["id", "k", "m", "lhs", "rhs", "pass"]
    assert all(row[5] == "true" for row in rows[1:])
    assert ["T34", "1", "1", "2", "2", "true"] in rows


def test_export_writes_graph6(tmp_path, capsys):
    out = tmp_path / "k4.g6"
    assert main(["export", "--set", "n=2;I=1,2", "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == b"C~\n"
    assert main(["export", "--set", "n=1;I=1"]) == EXIT_OK


def test_out_dir_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("ORBITCAYLEY_OUT_DIR", str(tmp_path))
    assert main(["export", "--set", "n=2;I=1,2", "--out", "k4.g6"]) == EXIT_OK
    assert (tmp_path / "k4.g6").read_bytes() == b"C~\n"


def test_emit_table1_shape():
    rows = emit_table1(1)
    assert [row["graph"] for row in rows] == [
        "Cay(Z2^4,S0+S1)",
        "Cay(Z2^4,S2+S3)",
        "Cay(Z2^6,S0+S1)",
        "Cay(Z2^6,S2+S3)",
        "Cay(Z2^6,S1+S2)",
        "Cay(Z2^6,S0+S3)",
    ]
    with pytest.raises(ValueError):
        emit_table1(0)
