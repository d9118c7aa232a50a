"""
Twins, gamma-pairs (perfect codes of size two) and the twin-class bookkeeping
used by the closed-form dimension claims.
"""
import logging
from dataclasses import dataclass
from enum import Enum

from pydantic import BaseModel

from errors import DisconnectedGraphError, PreconditionError
from graph_core import INF, DistMatrix, Graph, all_pairs_distances, complement, induced_subgraph
from products import modular_neighborhood_mask


class TwinKind(str, Enum):
    CLOSED = "closed"
    OPEN = "open"


class TwinPartition(BaseModel):
    kind: TwinKind
    classes: tuple[tuple[int, ...], ...]

    def class_index(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in cls}


class GammaPairSet(BaseModel):
    pairs: tuple[tuple[int, int], ...]

    def contains(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.pairs

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for pair in self.pairs for v in pair}))


class TwinOrdering(BaseModel):
    """
    Blocks T_1..T_k: closed-twin classes outside gamma-pairs first, then the
    merged gamma-paired class pairs. `split` is the number of unmerged blocks.
    """

    blocks: tuple[tuple[int, ...], ...]
    split: int

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class MinusGraphs:
    minus: Graph
    co_minus: Graph
    vertex_map: tuple[int, ...]


def twin_classes(graph: Graph, kind: TwinKind = TwinKind.CLOSED) -> TwinPartition:
    kind = TwinKind(kind)
    groups: dict[int, list[int]] = {}
    for v in range(graph.n):
        key = graph.closed_row(v) if kind is TwinKind.CLOSED else graph.rows[v]
        groups.setdefault(key, []).append(v)
    classes = sorted(tuple(vs) for vs in groups.values())
    return TwinPartition(kind=kind, classes=tuple(classes))


def is_gamma_pair(graph: Graph, u: int, v: int) -> bool:
    a, b = graph.closed_row(u), graph.closed_row(v)
    return u != v and a & b == 0 and a | b == graph.full_mask


def gamma_pairs(graph: Graph) -> GammaPairSet:
    pairs = [
        (u, v)
        for u in range(graph.n)
        for v in range(u + 1, graph.n)
        if is_gamma_pair(graph, u, v)
    ]
    return GammaPairSet(pairs=tuple(pairs))


def p_set(graph: Graph) -> tuple[int, ...]:
    return gamma_pairs(graph).vertices


def gp_graph(graph: Graph) -> Graph:
    return Graph.from_edges(graph.n, gamma_pairs(graph).pairs)


def minus_graphs(graph: Graph) -> MinusGraphs:
    """G- and its complement, induced on V(G) - P(G), with the map back into V(G)."""
    paired = set(p_set(graph))
    minus, vertex_map = induced_subgraph(graph, (v for v in range(graph.n) if v not in paired))
    return MinusGraphs(minus=minus, co_minus=complement(minus), vertex_map=vertex_map)


def twin_ordering(graph: Graph) -> TwinOrdering:
    partition = twin_classes(graph, TwinKind.CLOSED)
    index = partition.class_index()
    partner: dict[int, int] = {}
    for u, v in gamma_pairs(graph).pairs:
        a, b = index[u], index[v]
        for x, y in ((a, b), (b, a)):
            if partner.setdefault(x, y) != y:
                raise PreconditionError(
                    f"Twin class {partition.classes[x]} is gamma-paired with two classes"
                )

    single = [cls for i, cls in enumerate(partition.classes) if i not in partner]
    merged = []
    for a, b in sorted(partner.items()):
        if a < b:
            merged.append(tuple(sorted(partition.classes[a] + partition.classes[b])))
    merged.sort()
    logging.debug(f"Twin ordering: {len(single)} single blocks, {len(merged)} merged blocks")
    return TwinOrdering(blocks=tuple(single) + tuple(merged), split=len(single))


def modular_twin_predicate(
    g_graph: Graph, h_graph: Graph, first: tuple[int, int], second: tuple[int, int]
) -> bool:
    (g, h), (g2, h2) = first, second
    if g_graph.closed_row(g) == g_graph.closed_row(g2) and h_graph.closed_row(h) == h_graph.closed_row(h2):
        return True
    return is_gamma_pair(g_graph, g, g2) and is_gamma_pair(h_graph, h, h2)


def product_twins_by_neighborhood(
    g_graph: Graph, h_graph: Graph, first: tuple[int, int], second: tuple[int, int]
) -> bool:
    return modular_neighborhood_mask(g_graph, h_graph, *first) == modular_neighborhood_mask(
        g_graph, h_graph, *second
    )


def boundary_vertices(graph: Graph, dist: DistMatrix | None = None) -> tuple[int, ...]:
    dist = dist if dist is not None else all_pairs_distances(graph)
    ecc = dist.d.max(axis=1)
    diameter = ecc.max()
    if diameter >= INF:
        raise DisconnectedGraphError("Boundary vertices need a connected graph")
    return tuple(int(v) for v in (ecc == diameter).nonzero()[0])
