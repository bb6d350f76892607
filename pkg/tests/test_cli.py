"""Command-line interface: subcommands, exit codes, round trips."""

from __future__ import annotations

import json

import pytest

from superalg.cli import main
from superalg.core import sdf_dumps, sdf_loads


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFamilyCommand:
    def test_emit_and_lie_check(self, tmp_path, capsys):
        out = tmp_path / "n23.json"
        code, _, _ = run(["family", "N2M", "--m", "3", "-o", str(out)], capsys)
        assert code == 0
        code, stdout, _ = run(["check", str(out), "--identity", "lie"], capsys)
        assert code == 0 and "ok" in stdout

    def test_round_trip_is_bit_identical(self, tmp_path, capsys):
        out = tmp_path / "h.json"
        code, _, _ = run(["family", "H", "--n", "5", "--param", "beta4=1",
                          "-o", str(out)], capsys)
        assert code == 0
        text = out.read_text()
        assert sdf_dumps(sdf_loads(text)) == text

    def test_zeros_flag(self, tmp_path, capsys):
        out = tmp_path / "l.json"
        code, _, _ = run(["family", "L", "--n", "5", "--zeros", "-o", str(out)],
                         capsys)
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["parameters"] == []

    def test_wrong_size_flag(self, capsys):
        code, _, err = run(["family", "N2M", "--n", "3", "-o", "-"], capsys)
        assert code == 2 and "sized by --m" in err

    def test_domain_error_names_constraint(self, capsys):
        code, _, err = run(["family", "N2M", "--m", "4", "-o", "-"], capsys)
        assert code == 2 and "odd" in err

    def test_verbatim_mode(self, tmp_path, capsys):
        out = tmp_path / "m5.json"
        code, _, _ = run(["family", "M5", "--m", "5", "--errata", "verbatim",
                          "-o", str(out)], capsys)
        assert code == 0
        code, stdout, _ = run(["check", str(out)], capsys)
        assert code == 1 and "residual" in stdout


class TestAnalysisCommands:
    @pytest.fixture()
    def n23(self, tmp_path, capsys):
        out = tmp_path / "n23.json"
        assert main(["family", "N2M", "--m", "3", "-o", str(out)]) == 0
        capsys.readouterr()
        return str(out)

    def test_abelian_sdf_checks_clean(self, tmp_path, capsys):
        doc = {"name": "abelian", "even_basis": ["e1"], "odd_basis": ["y1"],
               "parameters": [], "products": []}
        path = tmp_path / "ab.json"
        path.write_text(json.dumps(doc))
        code, stdout, _ = run(["check", str(path)], capsys)
        assert code == 0 and "ok" in stdout

    def test_series(self, n23, capsys):
        code, stdout, _ = run(["series", n23], capsys)
        assert code == 0 and "stabilizes at zero" in stdout
        code, stdout, _ = run(["series", n23, "--type", "derived"], capsys)
        assert code == 0

    def test_charseq(self, n23, capsys):
        code, stdout, _ = run(["charseq", n23], capsys)
        assert code == 0 and "(1, 1 | 3)" in stdout

    def test_charseq_seed_env(self, n23, capsys, monkeypatch):
        monkeypatch.setenv("SUPERALG_SEED", "2")
        code, stdout, _ = run(["charseq", n23], capsys)
        assert code == 0 and "seed=2" in stdout

    def test_charseq_rejects_non_nilpotent(self, tmp_path, capsys):
        out = tmp_path / "sl.json"
        assert main(["family", "SL", "--n", "4", "-o", str(out)]) == 0
        capsys.readouterr()
        code, _, err = run(["charseq", str(out)], capsys)
        assert code == 2 and "nilpotent" in err

    def test_derivations(self, n23, capsys):
        code, stdout, _ = run(["derivations", n23], capsys)
        assert code == 0
        payload = json.loads(stdout)
        assert payload["degree"] == "even" and payload["dim"] >= 1
        code, stdout, _ = run(["derivations", n23, "--degree", "odd"], capsys)
        assert code == 0

    def test_annihilator(self, n23, capsys):
        code, stdout, _ = run(["annihilator", n23], capsys)
        assert code == 0 and "dims 1|0" in stdout and "e2" in stdout

    def test_invariants(self, n23, capsys):
        code, stdout, _ = run(["invariants", n23], capsys)
        assert code == 0
        payload = json.loads(stdout)
        assert payload["nilindex"] == 5
        assert payload["charseq"] == [[1, 1], [3]]

    def test_malformed_sdf_names_the_product(self, tmp_path, capsys):
        doc = {"name": "bad", "even_basis": ["e1"], "odd_basis": ["y1"],
               "parameters": [], "products": [
                   {"left": "e1", "right": "y1", "value": [["e1", "1"]]}]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(["check", str(path)], capsys)
        assert code == 2 and "[e1, y1]" in err

    def test_missing_file(self, capsys):
        code, _, err = run(["check", "/nonexistent.json"], capsys)
        assert code == 2


class TestCatalogAndErrata:
    def test_catalog_json(self, capsys):
        code, stdout, _ = run(["catalog"], capsys)
        assert code == 0
        catalog = json.loads(stdout)
        assert len(catalog) == 34
        assert catalog[0]["id"] == "N2M"

    def test_errata_filtered(self, capsys):
        code, stdout, _ = run(["errata", "--family", "H5", "--sizes", "4..5"],
                              capsys)
        assert code == 0
        entries = json.loads(stdout)
        assert entries and all(e["family"] == "H5" for e in entries)


class TestVerifyCommand:
    def test_corollary_sweep_json(self, capsys):
        code, stdout, _ = run(["verify", "--claims", "COR-H",
                               "--n-range", "5..7", "--json"], capsys)
        assert code == 0
        payload = json.loads(stdout)
        assert payload["all_ok"] is True
        assert payload["summary"]["fail"] == 0

    def test_text_report_to_file(self, tmp_path, capsys):
        path = tmp_path / "report.txt"
        code, stdout, _ = run(["verify", "--claims", "DIST-MH",
                               "--report", str(path)], capsys)
        assert code == 0 and "report written" in stdout
        assert "DIST-MH" in path.read_text()

    def test_unknown_claim(self, capsys):
        code, _, err = run(["verify", "--claims", "XYZ"], capsys)
        assert code == 2 and "no claims match" in err

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "--bogus"])
        assert exc.value.code == 2
