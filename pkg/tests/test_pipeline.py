import pytest

from families import ClaimId, ClosedFormClaim, make_claim, acceptance_suite, star
from pipeline import ClaimStatus, VerificationPipeline, pipeline_mermaid, run_suite, verify_claim


def test_matching_claim():
    report = verify_claim(make_claim(ClaimId.STARS, {"s": 3, "t": 2}))
    assert report.status is ClaimStatus.MATCH
    assert report.match
    assert report.computed == report.predicted == 8
    assert report.product_order == 12
    assert report.srg["cross_checked"] in (None, True)
    assert report.solver["optimal"]


def test_report_lists_clique_components_of_the_srg():
    report = verify_claim(make_claim(ClaimId.KNN_PAIR, {"n": 3, "m": 3}))
    assert report.status is ClaimStatus.MATCH
    assert report.srg["clique_components"] == [4] * 9


def test_wrong_prediction_is_a_mismatch():
    claim = ClosedFormClaim(id=ClaimId.STARS, g=star(3), h=star(2), params={"s": 3, "t": 2}, predicted=9)
    report = verify_claim(claim)
    assert report.status is ClaimStatus.MISMATCH
    assert report.computed == 8
    assert not report.match


def test_claim_outside_hypotheses_is_not_solved():
    report = verify_claim(make_claim(ClaimId.CYCLES, {"s": 5, "t": 7}))
    assert report.status is ClaimStatus.INVALID
    assert report.computed is None
    assert report.reason == "needs s, t >= 7"


def test_product_above_ceiling_is_skipped():
    report = verify_claim(make_claim(ClaimId.STARS, {"s": 3, "t": 2}), ceiling=4)
    assert report.status is ClaimStatus.SKIPPED
    assert report.computed is None
    assert "ceiling" in report.reason

    forced = verify_claim(make_claim(ClaimId.STARS, {"s": 3, "t": 2}), ceiling=4, allow_large=True)
    assert forced.status is ClaimStatus.MATCH


def test_complete_factor_claim_uses_the_formula():
    report = verify_claim(make_claim(ClaimId.COMPLETE_FACTOR, {"t": 2}, g=star(3)))
    assert report.status is ClaimStatus.MATCH
    assert report.solver["method"] == "complete-factor formula"
    assert report.srg == {}


def test_run_suite_orders_reports():
    claims = [
        make_claim(ClaimId.COMPLETE_FACTOR, {"t": 2}, g=star(3)),
        make_claim(ClaimId.STARS, {"s": 3, "t": 2}),
        make_claim(ClaimId.CYCLE_COMPLEMENTS, {"s": 5, "t": 5}),
    ]
    reports = run_suite(claims, threads=2)
    assert [r.id for r in reports] == [ClaimId.STARS, ClaimId.CYCLE_COMPLEMENTS, ClaimId.COMPLETE_FACTOR]
    assert all(r.status is ClaimStatus.MATCH for r in reports)


def test_pipeline_graph_renders():
    diagram = pipeline_mermaid(VerificationPipeline())
    for node in ("check_claim", "build_factors", "check_size", "solve", "compare"):
        assert node in diagram


@pytest.mark.slow
def test_every_closed_form_value_matches():
    reports = run_suite(acceptance_suite(), threads=2)
    mismatched = [(r.claim, r.predicted, r.computed, r.status.value) for r in reports if not r.match]
    assert mismatched == []
