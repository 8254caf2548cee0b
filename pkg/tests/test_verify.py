from __future__ import annotations

import math


from steinerdiam import verify
from steinerdiam.report import suite_document, to_json
from steinerdiam.verify import DISCREPANCY, FAIL, PASS, ClaimId, registry, run_all, run_claim

IN_SCOPE = {
    "OBS_1_1", "OBS_1_2", "THM_1_1", "OBS_2_1_CYCLE", "OBS_2_1_COMPLETE", "THM_2_1", "LEM_2_1", "LEM_2_2",
    "LEM_2_3", "COR_2_1", "LEM_2_4", "THM_3_1", "PROP_3_1", "LEM_3_1", "THM_3_2", "THM_4_1", "THM_4_2",
    "THM_4_3", "PROP_5_2",
}


def test_registry_complete():
    assert {c.value for c in ClaimId} == IN_SCOPE
    assert set(registry()) == set(ClaimId)


def test_run_all_small_passes_and_is_reproducible():
    a = run_all(7)
    assert a.failed == []
    assert a.discrepancies == [ClaimId.THM_4_2]
    assert a.exit_code == 0
    b = run_all(7)
    assert to_json(suite_document(a)) == to_json(suite_document(b))


def test_conflict_row_documents_both_statements():
    rep = run_claim("THM_4_2", 7)
    assert rep.status == DISCREPANCY
    (row,) = [r for r in rep.rows if r.status == DISCREPANCY]
    assert row.params["n"] == 7 and row.computed in (7, 8) and row.witness
    assert "lemma-level" in rep.evidence[0] and "theorem-level" in rep.evidence[0]


def test_cycle_claim_to_thirty():
    rep = run_claim(ClaimId.OBS_2_1_CYCLE, 30)
    assert rep.status == PASS
    assert {(r.params["n"], r.params["k"]) for r in rep.rows} >= {(30, 4), (3, 3)}


def test_expected_tables_are_literal():
    # spot values of the hard-coded tables
    cases = {(c[1], c[2], c[3]): c[4] for n in range(5, 11) for c in verify._expect_thm_4_3(n)}
    assert cases[(9, 2, 5)] == math.inf and cases[(10, 2, 6)] == 10
    assert cases[(9, 3, 5)] == 10 and cases[(8, 3, 4)] == 10
    cases = {(c[1], c[2], c[3]): c[4] for n in range(3, 9) for c in verify._expect_thm_3_1(n)}
    assert cases[(5, 3, 2)] == math.inf and cases[(6, 4, 2)] == 12 and cases[(7, 6, 2)] == 18


def test_failure_is_reported(monkeypatch):
    monkeypatch.setattr(verify, "_expect_thm_3_1", lambda n: [("forced", n, n - 1, 2, -1, "==")])
    rep = run_claim("THM_3_1", 5)
    assert rep.status == FAIL


def test_truncation_recorded(monkeypatch):
    monkeypatch.setenv("STEINER_MAX_N", "5")
    rep = run_claim("LEM_2_4", 9)
    assert rep.verified_range.endswith("n <= 5")
    assert rep.status == PASS
