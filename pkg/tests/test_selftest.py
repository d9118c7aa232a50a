import pytest

from corpus import atlas_graphs, factor_pairs, from_networkx, random_graphs, to_networkx
from families import cycle, generate, path, star
from graph_core import Graph
from selftest import (
    check_acceptance_srgs,
    check_distance_formulas,
    check_solver,
    check_srg_builders,
    check_twins,
    run_selftest,
)


def test_corpus_sizes():
    # non-isomorphic graphs on 1..3 vertices: 1 + 2 + 4
    assert len(atlas_graphs(3)) == 7
    pairs = list(factor_pairs(exhaustive_max_n=2, random_count=3, seed=7))
    assert len(pairs) == 3 * 3 + 3
    graphs = random_graphs(5, 6, seed=1, min_n=2)
    assert all(2 <= g.n <= 6 for g in graphs)
    assert random_graphs(5, 6, seed=1, min_n=2) == graphs


def test_networkx_round_trip(c5):
    assert from_networkx(to_networkx(c5)) == c5


@pytest.mark.parametrize(
    "g, h",
    [
        (generate(path(4)), generate(cycle(5))),
        (generate(star(3)), generate(path(5))),
        (generate(cycle(5)), generate(path(4))),
        (Graph.empty(3), Graph.empty(2)),
        (Graph.complete(2), generate(path(3))),
    ],
)
def test_property_checks_pass_on_known_pairs(g, h):
    assert check_distance_formulas(g, h) == []
    assert check_srg_builders(g, h) == []
    assert check_twins(g, h) == []


def test_solver_audit(c5):
    assert check_solver(c5) == []
    assert check_solver(Graph.empty(3)) == []


def test_acceptance_srg_audit():
    assert check_acceptance_srgs() == []


@pytest.mark.slow
def test_quick_selftest_passes():
    results = run_selftest(quick=True, threads=2, seed=11)
    assert set(results) == {
        "distance-oracle",
        "srg-builders",
        "twins-and-connectivity",
        "solver-audit",
        "acceptance-srgs",
    }
    assert all(failures == [] for failures in results.values())
