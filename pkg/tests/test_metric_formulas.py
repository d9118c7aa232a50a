import pytest
from hypothesis import given

from errors import PreconditionError
from families import generate, path
from graph_core import INF, Graph, all_pairs_distances, disjoint_union
from metric_formulas import (
    FactorProfile,
    ModularCaseTag,
    ModularDistanceCalculator,
    dist3_predicate,
    modular_connected,
    modular_diameter,
    modular_diameter_two,
    modular_distance,
    standard_product_distance,
)
from products import PairCode, ProductKind, build_product
from strategies import connected_graphs, graphs

STANDARD_KINDS = (ProductKind.CARTESIAN, ProductKind.STRONG, ProductKind.LEXICOGRAPHIC, ProductKind.DIRECT)


def _bfs(kind, g, h, first, second):
    code = PairCode(g.n, h.n)
    return all_pairs_distances(build_product(kind, g, h))(code.encode(*first), code.encode(*second))


def test_lexicographic_within_a_layer(p4):
    isolated = standard_product_distance(ProductKind.LEXICOGRAPHIC, Graph.empty(2), p4, (0, 0), (0, 3))
    assert isolated == 3
    shortcut = standard_product_distance(ProductKind.LEXICOGRAPHIC, Graph.complete(2), p4, (0, 0), (0, 3))
    assert shortcut == 2
    assert shortcut == _bfs(ProductKind.LEXICOGRAPHIC, Graph.complete(2), p4, (0, 0), (0, 3))


def test_direct_product_parity():
    k2 = Graph.complete(2)
    assert standard_product_distance(ProductKind.DIRECT, k2, k2, (0, 0), (0, 1)) == INF
    assert standard_product_distance(ProductKind.DIRECT, k2, k2, (0, 0), (1, 1)) == 1
    assert standard_product_distance(ProductKind.DIRECT, Graph.empty(1), k2, (0, 0), (0, 0)) == 0


def test_direct_product_isolated_coordinate(p4):
    g = disjoint_union(Graph.complete(2), Graph.empty(1))
    assert standard_product_distance(ProductKind.DIRECT, g, p4, (2, 0), (0, 1)) == INF


@pytest.mark.parametrize("kind", [ProductKind.MODULAR, ProductKind.DIRECT_CO_DIRECT])
def test_no_standard_formula_for_modular_kinds(kind, p4):
    with pytest.raises(PreconditionError):
        standard_product_distance(kind, p4, p4, (0, 0), (1, 1))


@given(graphs(max_n=4), graphs(max_n=4))
def test_standard_distances_agree_with_bfs(g, h):
    code = PairCode(g.n, h.n)
    profiles = (FactorProfile(g), FactorProfile(h))
    for kind in STANDARD_KINDS:
        bfs = all_pairs_distances(build_product(kind, g, h))
        for u in range(code.size):
            for v in range(code.size):
                a, b = code.decode(u), code.decode(v)
                assert standard_product_distance(kind, g, h, a, b, profiles) == bfs(u, v)


def test_case_tags(k3, p4):
    assert modular_distance(k3, Graph.complete(2), (0, 0), (1, 1)).tag is ModularCaseTag.BOTH_COMPLETE
    one = modular_distance(k3, p4, (0, 0), (1, 3))
    assert one.tag is ModularCaseTag.ONE_FACTOR_COMPLETE and one.value == 3
    assert modular_distance(Graph.empty(2), Graph.empty(3), (0, 0), (1, 1)).tag is ModularCaseTag.BOTH_EDGELESS
    assert modular_distance(p4, p4, (0, 0), (1, 1)).tag is ModularCaseTag.GENERAL


def test_two_clique_unions():
    two = disjoint_union(Graph.complete(2), Graph.complete(2))
    # sides: {0,1} -> 0, {2,3} -> 1
    same = modular_distance(two, two, (0, 0), (2, 2))
    assert same.tag is ModularCaseTag.TWO_CLIQUE_UNION and same.value == 1
    apart = modular_distance(two, two, (0, 0), (0, 2))
    assert apart.tag is ModularCaseTag.TWO_CLIQUE_PAIR_INFINITE and apart.value == INF
    assert apart.model_dump(mode="json")["value"] == "inf"
    assert not modular_connected(two, two)
    assert modular_diameter(two, two) == INF


def test_distance_three_through_a_gamma_pair(p4):
    # {0,3} is a gamma-pair of P4 at distance 3, so (1,0) and (1,3) have disjoint closed neighborhoods
    assert dist3_predicate(p4, p4, (1, 0), (1, 3))
    assert modular_distance(p4, p4, (1, 0), (1, 3)).value == 3
    assert _bfs(ProductKind.MODULAR, p4, p4, (1, 0), (1, 3)) == 3


def test_dist3_needs_the_general_case(k3, p4):
    with pytest.raises(PreconditionError):
        dist3_predicate(k3, p4, (0, 0), (1, 3))
    with pytest.raises(PreconditionError):
        modular_diameter_two(k3, p4)


def test_diameter_two_without_gamma_pairs_or_universal_vertices(p5, c5):
    assert modular_diameter_two(p5, c5)
    assert modular_diameter(p5, c5) == 2
    assert int(all_pairs_distances(build_product(ProductKind.MODULAR, p5, c5)).d.max()) == 2


def test_universal_vertex_needs_small_diameter_in_the_other_factor(claw, p5, c5):
    assert not modular_diameter_two(claw, p5)
    assert modular_diameter(claw, p5) == 3
    assert int(all_pairs_distances(build_product(ProductKind.MODULAR, claw, p5)).d.max()) == 3
    assert modular_diameter_two(claw, c5)


def test_complete_factor_with_disconnected_partner():
    assert not modular_connected(Graph.complete(2), Graph.empty(2))
    assert modular_diameter(Graph.complete(2), Graph.empty(2)) == INF
    assert modular_connected(Graph.complete(2), generate(path(3)))


def test_trivial_factors():
    assert modular_diameter(Graph.complete(1), Graph.complete(1)) == 0
    assert modular_diameter(Graph.complete(3), Graph.complete(2)) == 1
    with pytest.raises(PreconditionError):
        ModularDistanceCalculator(Graph.empty(0), Graph.complete(2))


@given(graphs(max_n=5), graphs(max_n=5))
def test_modular_distances_agree_with_bfs(g, h):
    calc = ModularDistanceCalculator(g, h)
    code = PairCode(g.n, h.n)
    bfs = all_pairs_distances(build_product(ProductKind.MODULAR, g, h))
    for u in range(code.size):
        for v in range(u, code.size):
            assert calc.distance(code.decode(u), code.decode(v)).value == bfs(u, v)
    assert calc.connected() == bool(bfs.d.max() < INF)
    assert calc.diameter() == int(bfs.d.max())


@given(connected_graphs(min_n=2, max_n=5), connected_graphs(min_n=2, max_n=5))
def test_general_case_diameter_is_two_or_three(g, h):
    calc = ModularDistanceCalculator(g, h)
    if calc.general_case:
        assert calc.diameter() in (2, 3)
        assert calc.diameter_two() == (calc.diameter() == 2)
