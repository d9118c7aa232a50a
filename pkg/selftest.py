"""
Property suites over small corpora. Each suite returns a list of failure
descriptions; an empty list means every check passed.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from config import Config
from corpus import atlas_graphs, factor_pairs, random_graphs
from errors import PreconditionError
from families import acceptance_suite, generate
from graph_core import INF, Graph, all_pairs_distances, induced_subgraph
from metric_formulas import FactorProfile, ModularDistanceCalculator, standard_product_distance
from products import PairCode, ProductKind, build_product, relabel, swap_permutation
from srg_builder import (
    srg_dispatch,
    srg_modular_diam2,
    srg_modular_diam3,
    srg_modular_gamma_case,
    srg_oracle,
)
from structure_analysis import modular_twin_predicate, product_twins_by_neighborhood
from vc_solver import BRUTE_FORCE_LIMIT, brute_force_vc, independence_number, min_vertex_cover

STANDARD_KINDS = (
    ProductKind.CARTESIAN,
    ProductKind.STRONG,
    ProductKind.LEXICOGRAPHIC,
    ProductKind.DIRECT,
)


def _label(g: Graph, h: Graph) -> str:
    return f"G(n={g.n}, E={g.edges()}) H(n={h.n}, E={h.edges()})"


def check_distance_formulas(g: Graph, h: Graph) -> list[str]:
    failures = []
    code = PairCode(g.n, h.n)
    profiles = (FactorProfile(g), FactorProfile(h))
    for kind in STANDARD_KINDS:
        bfs = all_pairs_distances(build_product(kind, g, h))
        for u, v in combinations(range(code.size), 2):
            value = standard_product_distance(kind, g, h, code.decode(u), code.decode(v), profiles)
            if value != bfs(u, v):
                failures.append(f"{kind.value} distance {code.decode(u)}-{code.decode(v)}: {value} != {bfs(u, v)} on {_label(g, h)}")
                break

    calc = ModularDistanceCalculator(g, h)
    product = build_product(ProductKind.MODULAR, g, h)
    bfs = all_pairs_distances(product)
    for u, v in combinations(range(code.size), 2):
        a, b = code.decode(u), code.decode(v)
        case = calc.distance(a, b)
        if case.value != bfs(u, v):
            failures.append(f"modular distance {a}-{b} [{case.tag.value}]: {case.value} != {bfs(u, v)} on {_label(g, h)}")
            break
        if calc.general_case and calc.dist3(a, b) != (bfs(u, v) == 3):
            failures.append(f"distance-3 predicate {a}-{b} disagrees with BFS on {_label(g, h)}")
            break

    bfs_connected = bool(bfs.d.max() < INF)
    if calc.connected() != bfs_connected:
        failures.append(f"connectivity predicate {calc.connected()} != BFS {bfs_connected} on {_label(g, h)}")
    if calc.general_case and calc.diameter_two() != (int(bfs.d.max()) == 2):
        failures.append(f"diameter-two predicate disagrees with BFS diameter {int(bfs.d.max())} on {_label(g, h)}")
    return failures


def check_srg_builders(g: Graph, h: Graph) -> list[str]:
    calc = ModularDistanceCalculator(g, h)
    if not calc.general_case:
        return []
    oracle = srg_oracle(build_product(ProductKind.MODULAR, g, h)).edge_set()
    failures = []
    builders = []
    if calc.diameter_two():
        builders.append(("diameter-two", srg_modular_diam2, False))
    else:
        builders.append(("diameter-three", srg_modular_diam3, False))
    if calc.g.has_gamma_pair and not calc.h.universal:
        builders.append(("gamma-pair", srg_modular_gamma_case, False))
    if calc.h.has_gamma_pair and not calc.g.universal:
        builders.append(("gamma-pair swapped", srg_modular_gamma_case, True))

    for name, builder, swapped in builders:
        try:
            if swapped:
                swapped_srg = builder(h, g).to_graph()
                edges = set(relabel(swapped_srg, swap_permutation(h.n, g.n)).edges())
            else:
                edges = builder(g, h).edge_set()
        except PreconditionError as e:
            failures.append(f"{name} builder rejected {_label(g, h)}: {e}")
            continue
        if edges != oracle:
            extra, missing = sorted(edges - oracle)[:3], sorted(oracle - edges)[:3]
            failures.append(f"{name} SRG mismatch on {_label(g, h)}: extra {extra}, missing {missing}")
    return failures


def check_twins(g: Graph, h: Graph) -> list[str]:
    failures = []
    code = PairCode(g.n, h.n)
    product = build_product(ProductKind.MODULAR, g, h)
    for u, v in combinations(range(code.size), 2):
        a, b = code.decode(u), code.decode(v)
        if modular_twin_predicate(g, h, a, b) != product_twins_by_neighborhood(g, h, a, b):
            failures.append(f"twin predicate {a}-{b} disagrees with neighborhoods on {_label(g, h)}")
            break
        if g.n >= 2 and h.n >= 2 and product.rows[u] == product.rows[v]:
            failures.append(f"false twins {a}-{b} in {_label(g, h)}")
            break

    if ModularDistanceCalculator(g, h).connected():
        twin_edges = {
            (u, v)
            for u, v in product.edges()
            if product_twins_by_neighborhood(g, h, code.decode(u), code.decode(v))
        }
        srg_edges = srg_oracle(product).edge_set()
        if set(product.edges()) & srg_edges != twin_edges:
            failures.append(f"product edges in the SRG are not exactly the twin edges on {_label(g, h)}")
    return failures


def check_solver(graph: Graph) -> list[str]:
    failures = []
    result = min_vertex_cover(graph)
    cover = set(result.witness)
    if any(u not in cover and v not in cover for u, v in graph.edges()):
        failures.append(f"witness misses an edge on n={graph.n}, E={graph.edges()}")
    if sum(1 for v in range(graph.n) if graph.rows[v]) <= BRUTE_FORCE_LIMIT:
        expected = brute_force_vc(graph)
        if result.size != expected:
            failures.append(f"solver {result.size} != brute force {expected} on n={graph.n}, E={graph.edges()}")
        if result.size + independence_number(graph) != graph.n:
            failures.append(f"beta + alpha != n on n={graph.n}, E={graph.edges()}")
    return failures


def check_acceptance_srgs() -> list[str]:
    """
    Solver against brute force on the SRGs of the acceptance products small
    enough to enumerate, plus the predicted value and the isolated-vertex reduction.
    """
    failures = []
    for claim in acceptance_suite():
        if not claim.validity:
            continue
        g, h = generate(claim.g), generate(claim.h)
        if g.n * h.n > BRUTE_FORCE_LIMIT:
            continue
        srg = srg_dispatch(g, h).to_graph()
        failures.extend(f"{claim.name}: {f}" for f in check_solver(srg))
        beta = brute_force_vc(srg)
        if beta != claim.predicted:
            failures.append(f"{claim.name}: brute force {beta} != predicted {claim.predicted}")
        core, _ = induced_subgraph(srg, (v for v in range(srg.n) if srg.rows[v]))
        if min_vertex_cover(core).size != beta:
            failures.append(f"{claim.name}: dropping isolated SRG vertices changed the cover size")
    return failures


def _run_pairs(check, pairs) -> list[str]:
    failures = []
    for g, h in pairs:
        failures.extend(check(g, h))
    return failures


def run_selftest(
    quick: bool = False, threads: int | None = None, seed: int | None = None
) -> dict[str, list[str]]:
    pair_count = 40 if quick else Config.RANDOM_PAIR_COUNT
    graph_count = 60 if quick else Config.RANDOM_GRAPH_COUNT
    exhaustive = 3 if quick else 4
    pairs = list(factor_pairs(exhaustive, pair_count, 6, seed))
    graphs = atlas_graphs(5 if quick else 7) + random_graphs(graph_count, 18, seed)
    logging.info(f"Selftest corpus: {len(pairs)} factor pairs, {len(graphs)} graphs")

    suites = {
        "distance-oracle": lambda: _run_pairs(check_distance_formulas, pairs),
        "srg-builders": lambda: _run_pairs(check_srg_builders, pairs),
        "twins-and-connectivity": lambda: _run_pairs(check_twins, pairs),
        "solver-audit": lambda: [f for graph in graphs for f in check_solver(graph)],
        "acceptance-srgs": check_acceptance_srgs,
    }
    with ThreadPoolExecutor(max_workers=threads or Config.THREADS) as pool:
        futures = {name: pool.submit(suite) for name, suite in suites.items()}
        results = {name: future.result() for name, future in futures.items()}
    for name, failures in results.items():
        if failures:
            logging.error(f"❌ {name}: {len(failures)} failure(s); first: {failures[0]}")
        else:
            logging.info(f"✅ {name}: passed")
    return results
