"""
Graph corpora for the property suites: every graph up to isomorphism on a
few vertices (networkx graph atlas) and seeded random graphs.
"""
from itertools import product as cartesian
from typing import Iterator

import networkx as nx
import numpy as np

from config import Config
from graph_core import Graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(nx_graph.nodes()))}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in nx_graph.edges()))


def to_networkx(graph: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n))
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def atlas_graphs(max_n: int = 4) -> list[Graph]:
    """All non-isomorphic graphs with 1..max_n vertices (max_n <= 7)."""
    return [from_networkx(g) for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= max_n]


def random_graph(rng: np.random.Generator, min_n: int, max_n: int) -> Graph:
    n = int(rng.integers(min_n, max_n + 1))
    density = rng.uniform(0.15, 0.85)
    upper = np.triu(rng.random((n, n)) < density, k=1)
    us, vs = np.nonzero(upper)
    return Graph.from_edges(n, zip(us.tolist(), vs.tolist()))


def random_graphs(count: int, max_n: int, seed: int | None = None, min_n: int = 1) -> list[Graph]:
    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    return [random_graph(rng, min_n, max_n) for _ in range(count)]


def factor_pairs(
    exhaustive_max_n: int = 4,
    random_count: int | None = None,
    random_max_n: int = 6,
    seed: int | None = None,
) -> Iterator[tuple[Graph, Graph]]:
    """Every ordered pair of atlas graphs, then seeded random pairs."""
    atlas = atlas_graphs(exhaustive_max_n)
    yield from cartesian(atlas, atlas)
    count = Config.RANDOM_PAIR_COUNT if random_count is None else random_count
    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    for _ in range(count):
        yield random_graph(rng, 1, random_max_n), random_graph(rng, 1, random_max_n)
