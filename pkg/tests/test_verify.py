"""Claim pipeline: reports, determinism, and the audit guarantee."""

from __future__ import annotations

import json

import pytest

from superalg.errors import InputError
from superalg.verify import (audit_errata, claim_ids, pairwise_distinguish,
                             render_text, run_claims,
                             verify_corollary, verify_derivation_proposition,
                             verify_nilpotent_family, verify_solvable_family)


def failing(report):
    return [(c.name, c.detail) for c in report.checks if c.status != "pass"]


class TestNilpotentClaims:
    def test_zero_instance_passes(self):
        report = verify_nilpotent_family("L", 6)
        assert report.status == "pass", failing(report)

    def test_filiform_odd_nilindex(self):
        report = verify_nilpotent_family("N2M", 5)
        assert report.status == "pass", failing(report)
        detail = next(c.detail for c in report.checks if c.name == "nilindex")
        assert "7" in detail

    def test_nonzero_instance(self):
        params = {p: 0 for p in
                  __import__("superalg").parameter_names("H", 5)}
        params["delta"] = 1
        report = verify_nilpotent_family("H", 5, params)
        assert report.status == "pass", failing(report)


class TestSolvableClaims:
    def test_split_alpha_extension(self):
        report = verify_solvable_family("SL", 5)
        assert report.status == "pass", failing(report)
        names = [c.name for c in report.checks]
        assert "nilradical-structure-match" in names
        assert "codimension" in names

    def test_codim_two_extension(self):
        report = verify_solvable_family("MH2", 5)
        assert report.status == "pass", failing(report)

    def test_filiform_odd_extension(self):
        report = verify_solvable_family("M1", 3)
        assert report.status == "pass", failing(report)

    def test_beta_instance_extensions(self):
        for fid, size, params in (("SH1", 6, {"t": 5}), ("SH3", 5, {"gamma": 1}),
                                  ("SG2", 5, {"gamma": 1}), ("SH4", 4, {}),
                                  ("G4", 5, {"gamma": 1, "b": 1})):
            report = verify_solvable_family(fid, size, params)
            assert report.status == "pass", (fid, failing(report))

    def test_wrong_kind_rejected(self):
        with pytest.raises(InputError):
            verify_solvable_family("L", 4)
        with pytest.raises(InputError):
            verify_nilpotent_family("SL", 4)


class TestPropositionClaims:
    @pytest.mark.parametrize("pid,n", [("P-L", 6), ("P-M", 5), ("P-H", 5),
                                       ("P-G", 6)])
    def test_default_samples(self, pid, n):
        report = verify_derivation_proposition(pid, n)
        assert report.status == "pass", failing(report)

    def test_beta_constraint_sample(self):
        report = verify_derivation_proposition("P-H", 5, [{"beta4": 1}])
        assert report.status == "pass", failing(report)

    def test_weight_kill_sample(self):
        report = verify_derivation_proposition("P-M", 5, [{"tau": 1}])
        assert report.status == "pass", failing(report)

    def test_template_correction_note_present(self):
        report = verify_derivation_proposition("P-M", 4)
        assert any("template correction" in n for n in report.notes)


class TestCorollaryClaims:
    @pytest.mark.parametrize("cid,n", [("COR-L", 6), ("COR-M", 5),
                                       ("COR-H", 7), ("COR-H", 6),
                                       ("COR-G", 7), ("COR-G", 6)])
    def test_sweeps(self, cid, n):
        report = verify_corollary(cid, n)
        assert report.status == "pass", failing(report)


class TestDistinguish:
    def test_codim_two_pair_distinguished(self):
        report = pairwise_distinguish([("MH1", 5, {}), ("MH2", 5, {})])
        assert "all pairs distinguished" in report.checks[0].detail

    def test_identical_members_not_distinguished(self):
        report = pairwise_distinguish([("H3", 5, {}), ("H3", 5, {})])
        assert "not distinguished" in report.checks[0].detail

    def test_single_beta_vs_weight_family(self):
        report = pairwise_distinguish([("H1", 5, {"b": 1}), ("H2", 5, {"b": 1})])
        assert "all pairs distinguished" in report.checks[0].detail


class TestAudit:
    def test_families_with_errata(self):
        for fid, size, params in (("M", 6, None), ("H", 5, None),
                                  ("M5", 5, None), ("G5", 5, None),
                                  ("SG1", 5, {"t": 4}), ("H5", 4, None)):
            report = audit_errata(fid, size, params)
            assert report.status == "pass", (fid, failing(report))

    def test_families_without_errata(self):
        for fid, size in (("N2M", 5), ("L", 6), ("SL", 4), ("G", 5)):
            report = audit_errata(fid, size)
            assert report.status == "pass", (fid, failing(report))


class TestRunner:
    def test_selected_claims_and_range(self):
        report = run_claims(["COR-H"], (5, 6))
        assert report.all_ok
        assert {c.claim_id for c in report.claims} == {"COR-H"}
        assert len(report.claims) == 2  # n = 5 and n = 6

    def test_unknown_claim_rejected(self):
        with pytest.raises(InputError):
            run_claims(["NOPE"])

    def test_report_is_deterministic_and_serializable(self):
        a = run_claims(["NILP-N2M"], (3, 5))
        b = run_claims(["NILP-N2M"], (3, 5))
        da, db = a.as_dict(), b.as_dict()
        da.pop("wall_time_s"), db.pop("wall_time_s")
        for claim in da["claims"] + db["claims"]:
            claim.pop("wall_time_s")
        assert json.dumps(da) == json.dumps(db)

    def test_text_rendering(self):
        report = run_claims(["DIST-MH"])
        text = render_text(report)
        assert "DIST-MH" in text and "pass" in text

    def test_claim_catalog_contains_every_kind(self):
        ids = claim_ids()
        for prefix in ("NILP-", "P-", "COR-", "SOLV-", "DIST-", "AUDIT-"):
            assert any(cid.startswith(prefix) for cid in ids)
