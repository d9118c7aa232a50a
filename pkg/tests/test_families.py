import pytest

from errors import FamilyDomainError
from families import (
    ClaimId,
    FamilySpec,
    FamilyTag,
    claim_from_json,
    clique_union,
    complement_of,
    cycle,
    cycle_r_term,
    generate,
    hstq,
    knn_minus_m,
    make_claim,
    acceptance_suite,
    path,
    predicted_dims,
    quick_suite,
    star,
    star_hstq_b,
)
from graph_core import classify


def test_basic_families():
    assert generate(path(5)).edge_count == 4
    assert generate(cycle(5)).edges()[-1] == (3, 4)
    claw = generate(star(3))
    assert claw.n == 4 and claw.degree(0) == 3
    union = generate(clique_union(2, 3))
    assert union.n == 5 and union.edge_count == 4
    assert classify(union).is_union_of_two_cliques
    assert generate(complement_of(cycle(5))).edge_count == 5


def test_knn_minus_m():
    plain = generate(knn_minus_m(3))
    assert plain.n == 6 and plain.edge_count == 6
    assert not plain.adjacent(0, 3)
    assert plain.adjacent(0, 4)
    blown = generate(knn_minus_m(3, (2, 1, 1), (1, 1, 1)))
    assert blown.n == 7 and blown.edge_count == 9
    assert blown.adjacent(0, 1)


def test_hstq_labeling():
    graph = generate(hstq(4, 4, 3))
    assert graph.n == 12 and graph.edge_count == 22
    z, y_t = 11, 7
    assert not graph.adjacent(y_t, z)
    assert all(graph.adjacent(y, z) for y in (4, 5, 6))
    assert all(graph.adjacent(w, z) for w in (8, 9, 10))


def test_labels():
    assert path(5).label == "P_5"
    assert star(3).label == "K_{1,3}"
    assert hstq(4, 4, 3).label == "H(4,4,3)"
    assert complement_of(cycle(5)).label == "co-(C_5)"
    assert knn_minus_m(3).label == "K_{3,3}^-M(1,1,1;1,1,1)"


@pytest.mark.parametrize(
    "spec",
    [
        cycle(2),
        path(0),
        hstq(1, 1, 0),
        FamilySpec(tag=FamilyTag.KNN_MINUS_M, params=(3, 1, 1)),
        FamilySpec(tag=FamilyTag.COMPLEMENT),
        FamilySpec(tag=FamilyTag.PATH, params=(3, 4)),
        clique_union(),
    ],
)
def test_domain_errors(spec):
    with pytest.raises(FamilyDomainError):
        generate(spec)


def test_b_table_rows():
    assert star_hstq_b(3, 3, 4, 4) == 5
    assert star_hstq_b(5, 3, 4, 4) == 6
    assert star_hstq_b(6, 3, 5, 4) == 7
    assert star_hstq_b(8, 3, 5, 4) == 3 + 5
    assert star_hstq_b(9, 3, 4, 5) == 3 + 4


def test_cycle_r_term():
    assert cycle_r_term(7, 7) == 0
    assert cycle_r_term(8, 8) == 1
    assert cycle_r_term(8, 9) == 2
    assert cycle_r_term(9, 9) == 0


@pytest.mark.parametrize(
    "claim_id, params, predicted",
    [
        (ClaimId.STARS, {"s": 3, "t": 2}, 8),
        (ClaimId.STARS, {"s": 4, "t": 3}, 16),
        (ClaimId.CYCLE_COMPLEMENTS, {"s": 5, "t": 5}, 20),
        (ClaimId.CYCLE_COMPLEMENTS, {"s": 5, "t": 6}, 24),
        (ClaimId.CYCLES, {"s": 7, "t": 7}, 41),
        (ClaimId.CYCLES, {"s": 7, "t": 8}, 48),
        (ClaimId.CYCLES, {"s": 8, "t": 8}, 55),
        (ClaimId.CYCLES, {"s": 8, "t": 9}, 62),
        (ClaimId.KNN_PAIR, {"n": 3, "m": 3}, 27),
        (ClaimId.STAR_HSTQ, {"r": 3, "q": 3, "s": 4, "t": 4}, 39),
    ],
)
def test_parameter_claims(claim_id, params, predicted):
    claim = make_claim(claim_id, params)
    assert claim.validity
    assert predicted_dims(claim) == predicted


def test_claims_with_factor_specs():
    blown = knn_minus_m(3, (2, 1, 1), (1, 1, 1))
    assert make_claim(ClaimId.KNN_MINUS_M, g=blown, h=cycle(7)).predicted == 28
    assert make_claim(ClaimId.KNN_PLAIN, {"n": 3}, h=cycle(7)).predicted == 21
    assert make_claim(ClaimId.KNN_BLOWUP_PAIR, g=blown, h=knn_minus_m(3)).predicted == 33
    assert make_claim(ClaimId.P5, h=cycle(7)).predicted == 19
    assert make_claim(ClaimId.P5_PATH_CYCLE, h=path(7)).predicted == 19
    assert make_claim(ClaimId.COMPLETE_FACTOR, {"t": 2}, g=path(4)).predicted == 5


@pytest.mark.parametrize(
    "claim_id, params, h",
    [
        (ClaimId.STARS, {"s": 2, "t": 3}, None),
        (ClaimId.CYCLES, {"s": 6, "t": 7}, None),
        (ClaimId.CYCLE_COMPLEMENTS, {"s": 4, "t": 5}, None),
        (ClaimId.P5_PATH_CYCLE, {}, cycle(5)),
        (ClaimId.P5, {}, star(3)),
        (ClaimId.KNN_PLAIN, {"n": 2}, cycle(7)),
    ],
)
def test_claims_outside_their_hypotheses(claim_id, params, h):
    claim = make_claim(claim_id, params, h=h)
    assert not claim.validity
    assert claim.reason
    assert predicted_dims(claim) is None


def test_missing_parameters_and_factors():
    with pytest.raises(FamilyDomainError):
        make_claim(ClaimId.STARS, {"s": 3})
    with pytest.raises(FamilyDomainError):
        make_claim(ClaimId.P5)


def test_claim_from_json():
    claim = claim_from_json({"id": "cycles", "params": {"s": 7, "t": 7}})
    assert claim.predicted == 41
    nested = claim_from_json({"id": "p5", "h": {"tag": "cycle", "params": [7]}})
    assert nested.predicted == 19
    assert nested.name == "p5: P_5 <> C_7"


def test_suites_are_ordered_by_claim_id():
    suite = acceptance_suite()
    assert len(suite) == 17
    assert all(claim.validity for claim in suite)
    keys = [claim.sort_key for claim in suite]
    assert keys == sorted(keys)
    assert {c.name for c in quick_suite()} <= {c.name for c in suite}
