"""CLI behavior: analyze/sweep/figure/verify plus the mutation check."""

from __future__ import annotations

import csv
import io
import json

import ccc_spectra.closed_forms as closed_forms
from ccc_spectra.cli import main
from ccc_spectra.groups import FamilySpec
from ccc_spectra.verify import check_oracle_equality, run_analyses


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_d14(capsys):
    code, out, _ = run_cli(capsys, "analyze", "dihedral:n=7")
    assert code == 0
    assert "K_3 u K_1" in out
    assert "LE = 6" in out and "LE+ = 5" in out
    assert "matches the brute-force pipeline exactly" in out


def test_analyze_t8_zero(capsys):
    code, out, _ = run_cli(capsys, "analyze", "dicyclic:n=2")
    assert code == 0
    assert "E = 0" in out and "LE = 0" in out and "LE+ = 0" in out


def test_analyze_sd16(capsys):
    code, out, _ = run_cli(capsys, "analyze", "semidihedral:n=2", "--oracle")
    assert code == 0
    assert "LE+ = 28/5" in out


def test_analyze_abelian_member(capsys):
    code, out, _ = run_cli(capsys, "analyze", "unm:n=3,m=2")
    assert code == 0
    assert "abelian" in out


def test_analyze_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "v8n:n=3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["report"]["le_cn"] == "360/7"
    assert payload["classification"]["cnl_status"] == "below"
    assert payload["mismatches"] == []


def test_analyze_bad_spec(capsys):
    code, _, err = run_cli(capsys, "analyze", "dihedral:n=1")
    assert code == 2
    assert "error:" in err


def test_sweep_csv_deterministic(tmp_path, capsys):
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    for path in (out_a, out_b):
        code, _, _ = run_cli(
            capsys,
            "sweep",
            "--family",
            "dihedral",
            "--range",
            "3..9",
            "--step",
            "2",
            "--out",
            str(path),
            "--oracle",
        )
        assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    rows = list(csv.DictReader(io.StringIO(out_a.read_text())))
    assert [r["params"] for r in rows] == ["n=3", "n=5", "n=7", "n=9"]
    d14 = rows[2]
    assert d14["e_cn"] == "4" and d14["le_cn"] == "6" and d14["le_plus_cn"] == "5"
    assert d14["cnl_status"] == "below" and d14["ordering"] == "strict_chain"


def test_sweep_header(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code, _, _ = run_cli(
        capsys, "sweep", "--family", "dicyclic", "--range", "2..4", "--out", str(out)
    )
    assert code == 0
    header = out.read_text().splitlines()[0]
    assert header == (
        "family,params,vertices,e_cn,le_cn,le_plus_cn,"
        "e_cn_f,le_cn_f,le_plus_cn_f,cnl_status,cnsl_status,ordering"
    )


def test_sweep_records_partial_failures(tmp_path, capsys):
    out = tmp_path / "unm.csv"
    code, _, err = run_cli(
        capsys, "sweep", "--family", "unm:n=2", "--range", "2..4", "--out", str(out)
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert rows[0]["cnl_status"] == "error"  # m=2 member is abelian
    assert rows[1]["cnl_status"] != "error"
    assert "1 row(s) recorded an error" in err


def test_sweep_two_free_parameters(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--family", "unm", "--range", "3..4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [row["params"] for row in payload] == [
        "n=3,m=3",
        "n=3,m=4",
        "n=4,m=3",
        "n=4,m=4",
    ]


def test_figure_fig3(capsys):
    code, out, _ = run_cli(capsys, "figure", "fig3")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["params"] for r in rows][:3] == ["n=2", "n=3", "n=4"]
    by_n = {r["params"]: r for r in rows}
    assert by_n["n=4"]["le_plus_cn"] == "28/5"
    assert by_n["n=5"]["le_cn"] == "24"
    code, _, err = run_cli(capsys, "figure", "fig99")
    assert code == 2 and "unknown figure" in err


def test_verify_quick_reports_known_discrepancy(capsys):
    code, out, _ = run_cli(capsys, "verify", "quick")
    lines = out.splitlines()
    passes = [l for l in lines if l.startswith("PASS ")]
    fails = [l for l in lines if l.startswith("FAIL ")]
    # Six groups of checks pass; the claim tables surface the documented
    # v8n[n=4] threshold discrepancy, so the exit code is nonzero.
    assert len(passes) == 6
    assert len(fails) == 1 and "claim tables" in fails[0]
    assert any("v8n[n=4] cnsl_status" in l for l in lines)
    assert code == 1


def test_mutated_branch_is_named(monkeypatch):
    original = closed_forms._FAMILY_ROWS["dicyclic"]

    def broken(spec):
        parts, cnl, cnsl, le, lep, variant, le_b, lep_b = original(spec)
        return parts, cnl, cnsl, le + 1, lep, variant, le_b, lep_b

    monkeypatch.setitem(closed_forms._FAMILY_ROWS, "dicyclic", broken)
    outcome = check_oracle_equality(run_analyses([FamilySpec(family="dicyclic", n=5)]))
    assert not outcome.ok
    assert any("le_cn" in d and "closed-form:dicyclic" in d for d in outcome.details)
