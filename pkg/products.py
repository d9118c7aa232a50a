"""
The six graph products on V(G) x V(H), encoded row-major: (g, h) -> g * n(H) + h.
"""
from dataclasses import dataclass
from enum import Enum

from errors import PreconditionError
from graph_core import Graph, complement, iter_bits


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"
    DIRECT_CO_DIRECT = "direct-co-direct"
    MODULAR = "modular"


@dataclass(frozen=True)
class PairCode:
    n_g: int
    n_h: int

    def encode(self, g: int, h: int) -> int:
        return g * self.n_h + h

    def decode(self, code: int) -> tuple[int, int]:
        return divmod(code, self.n_h)

    @property
    def size(self) -> int:
        return self.n_g * self.n_h


def _h_blocks(kind: ProductKind, h_graph: Graph, h: int) -> tuple[int, int, int]:
    """
    Second-coordinate masks for partners (g', .) of (g, h) when g' = g,
    when g' is adjacent to g, and when g' is distinct and non-adjacent.
    """
    row = h_graph.rows[h]
    closed = row | (1 << h)
    non = h_graph.full_mask & ~closed
    if kind is ProductKind.CARTESIAN:
        return row, 1 << h, 0
    if kind is ProductKind.DIRECT:
        return 0, row, 0
    if kind is ProductKind.STRONG:
        return row, closed, 0
    if kind is ProductKind.LEXICOGRAPHIC:
        return row, h_graph.full_mask, 0
    if kind is ProductKind.DIRECT_CO_DIRECT:
        return 0, row, non
    return row, closed, non


def build_product(kind: ProductKind, g_graph: Graph, h_graph: Graph) -> Graph:
    if g_graph.n < 1 or h_graph.n < 1:
        raise PreconditionError("Product factors must have at least one vertex")
    kind = ProductKind(kind)
    n_h = h_graph.n
    rows = []
    for g in range(g_graph.n):
        adj_g = g_graph.rows[g]
        non_g = g_graph.full_mask & ~g_graph.closed_row(g)
        for h in range(n_h):
            same, adj, non = _h_blocks(kind, h_graph, h)
            row = same << (g * n_h)
            if adj:
                for g2 in iter_bits(adj_g):
                    row |= adj << (g2 * n_h)
            if non:
                for g2 in iter_bits(non_g):
                    row |= non << (g2 * n_h)
            rows.append(row)
    return Graph(g_graph.n * n_h, tuple(rows))


def modular_neighborhood_mask(g_graph: Graph, h_graph: Graph, g: int, h: int) -> int:
    """N[(g,h)] = N[g] x N[h]  union  (V(G)-N[g]) x (V(H)-N[h]), as a pair-code bitmask."""
    n_h = h_graph.n
    closed_h = h_graph.closed_row(h)
    non_h = h_graph.full_mask & ~closed_h
    closed_g = g_graph.closed_row(g)
    mask = 0
    for g2 in iter_bits(closed_g):
        mask |= closed_h << (g2 * n_h)
    if non_h:
        for g2 in iter_bits(g_graph.full_mask & ~closed_g):
            mask |= non_h << (g2 * n_h)
    return mask


def modular_neighborhood(g_graph: Graph, h_graph: Graph, g: int, h: int) -> frozenset[int]:
    return frozenset(iter_bits(modular_neighborhood_mask(g_graph, h_graph, g, h)))


def swap_permutation(n_g: int, n_h: int) -> list[int]:
    """perm[code of (g,h) in G*H] = code of (h,g) in H*G."""
    return [h * n_g + g for g in range(n_g) for h in range(n_h)]


def relabel(graph: Graph, perm: list[int]) -> Graph:
    rows = [0] * graph.n
    for u in range(graph.n):
        row = 0
        for v in iter_bits(graph.rows[u]):
            row |= 1 << perm[v]
        rows[perm[u]] = row
    return Graph(graph.n, tuple(rows))


def modular_edge_decomposition(g_graph: Graph, h_graph: Graph) -> dict[str, set[tuple[int, int]]]:
    """Modular product edges split into their Cartesian, direct and co-direct parts."""
    return {
        "cartesian": set(build_product(ProductKind.CARTESIAN, g_graph, h_graph).edges()),
        "direct": set(build_product(ProductKind.DIRECT, g_graph, h_graph).edges()),
        "co-direct": set(
            build_product(ProductKind.DIRECT, complement(g_graph), complement(h_graph)).edges()
        ),
    }
