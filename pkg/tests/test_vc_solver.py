import inspect

import pytest
from hypothesis import given

import vc_solver
from config import Config
from errors import CoverWitnessError, DisconnectedGraphError, SizeGuardError
from families import complement_of, cycle, generate, path, star
from graph_core import Graph, complement, induced_subgraph
from products import ProductKind, build_product
from srg_builder import srg_dispatch, srg_oracle
from strategies import connected_graphs, graphs
from vc_solver import (
    brute_force_vc,
    independence_number,
    min_vertex_cover,
    modular_dimension_with_srg,
    strong_metric_dimension,
    strong_metric_dimension_modular,
)


def _covers(graph, witness):
    chosen = set(witness)
    return all(u in chosen or v in chosen for u, v in graph.edges())


@pytest.mark.parametrize(
    "graph, beta",
    [
        (Graph.empty(4), 0),
        (Graph.complete(4), 3),
        (generate(star(5)), 1),
        (generate(path(4)), 2),
        (generate(cycle(5)), 3),
        (generate(cycle(8)), 4),
        (complement(generate(cycle(7))), 5),
    ],
)
def test_vertex_cover_numbers(graph, beta):
    result = min_vertex_cover(graph)
    assert result.size == beta
    assert result.optimal and result.lower_bound == beta
    assert _covers(graph, result.witness)


def test_canonical_witness_is_lexicographically_smallest():
    assert min_vertex_cover(Graph.complete(3), canonical=True).witness == (0, 1)
    assert min_vertex_cover(generate(cycle(4)), canonical=True).witness == (0, 2)
    assert min_vertex_cover(generate(path(3)), canonical=True).witness == (1,)


def test_tiny_budget_still_returns_a_cover():
    graph = complement(generate(cycle(40)))
    result = min_vertex_cover(graph, budget=1e-9)
    assert _covers(graph, result.witness)
    assert result.lower_bound <= result.size


def test_brute_force_guard():
    with pytest.raises(SizeGuardError):
        brute_force_vc(generate(path(30)))
    assert independence_number(Graph.empty(40)) == 40


@given(graphs(max_n=12))
def test_solver_agrees_with_brute_force(graph):
    result = min_vertex_cover(graph)
    assert result.size == brute_force_vc(graph)
    assert result.size + independence_number(graph) == graph.n
    assert _covers(graph, result.witness)


@given(graphs(max_n=9))
def test_canonical_cover_is_optimal(graph):
    plain = min_vertex_cover(graph)
    canonical = min_vertex_cover(graph, canonical=True)
    assert canonical.size == plain.size
    assert _covers(graph, canonical.witness)
    assert canonical.witness <= plain.witness


@pytest.mark.parametrize(
    "graph, dims",
    [
        (generate(path(6)), 1),
        (generate(cycle(5)), 3),
        (generate(cycle(6)), 3),
        (Graph.complete(4), 3),
        (generate(star(4)), 3),
    ],
)
def test_strong_metric_dimension(graph, dims):
    assert strong_metric_dimension(graph) == dims


def test_modular_dimension_of_stars():
    result, srg = modular_dimension_with_srg(generate(star(3)), generate(star(2)))
    assert result.size == 8
    assert result.method.startswith("srg-")
    assert srg is not None and srg.cross_checked in (None, True)


def test_modular_dimension_with_one_complete_factor(p4):
    result, srg = modular_dimension_with_srg(p4, Graph.complete(2))
    assert result.size == 5
    assert result.method == "complete-factor formula"
    assert result.witness is None and srg is None
    assert strong_metric_dimension_modular(Graph.complete(2), p4).size == 5


def test_modular_dimension_needs_connected_product():
    with pytest.raises(DisconnectedGraphError):
        strong_metric_dimension_modular(Graph.complete(2), Graph.empty(2))


@given(connected_graphs(min_n=2, max_n=4), connected_graphs(min_n=2, max_n=3))
def test_modular_dimension_matches_product_oracle(g, h):
    direct = strong_metric_dimension(build_product(ProductKind.MODULAR, g, h))
    assert strong_metric_dimension_modular(g, h).size == direct


def test_complete_factor_formula_agrees_with_the_full_product(p4):
    product = build_product(ProductKind.MODULAR, p4, Graph.complete(2))
    assert product.n == 8
    assert strong_metric_dimension(product) == 5


def test_default_budget_comes_from_config():
    assert inspect.signature(min_vertex_cover).parameters["budget"].default == Config.SOLVER_BUDGET_SECONDS


def test_uncovered_edge_in_witness_is_an_error(monkeypatch, p4):
    monkeypatch.setattr(vc_solver, "_max_independent", lambda graph, alive, deadline: (alive, 0, True, 0, graph.n))
    with pytest.raises(CoverWitnessError, match="uncovered"):
        min_vertex_cover(p4)


@pytest.mark.parametrize(
    "g, h, beta",
    [
        (star(3), star(2), 8),
        (complement_of(cycle(5)), complement_of(cycle(5)), 20),
    ],
)
def test_solver_matches_brute_force_on_small_modular_srgs(g, h, beta):
    srg = srg_dispatch(generate(g), generate(h)).to_graph()
    assert min_vertex_cover(srg).size == brute_force_vc(srg) == beta


@given(connected_graphs(min_n=2, max_n=4), connected_graphs(min_n=2, max_n=3))
def test_isolated_srg_vertices_do_not_change_the_cover(g, h):
    srg = srg_oracle(build_product(ProductKind.MODULAR, g, h)).to_graph()
    core, _ = induced_subgraph(srg, (v for v in range(srg.n) if srg.rows[v]))
    assert core.edge_count == srg.edge_count
    assert min_vertex_cover(core).size == min_vertex_cover(srg).size
