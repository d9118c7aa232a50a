"""
Simple undirected graphs on vertices 0..n-1, stored as one bitset row per vertex,
plus the BFS distance oracles everything else is checked against.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np
from pydantic import BaseModel, field_serializer

from errors import ModprodError

# Larger than any attainable distance; serialized as "inf".
INF = 1 << 30


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def dist_to_json(value: int) -> int | str:
    return "inf" if value >= INF else int(value)


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Immutable simple graph. rows[u] has bit v set iff uv is an edge.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ModprodError(f"Graph needs exactly n={self.n} adjacency rows, got {len(self.rows)}")
        for u, row in enumerate(self.rows):
            if row >> self.n:
                raise ModprodError(f"Row {u} references a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise ModprodError(f"Self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.rows[v] >> u & 1:
                    raise ModprodError(f"Adjacency is not symmetric for {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ModprodError(f"Self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ModprodError(f"Edge {u} {v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.rows[u]))

    def closed_row(self, u: int) -> int:
        return self.rows[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2


@dataclass(frozen=True)
class DistMatrix:
    """All-pairs distances; unreachable pairs hold INF."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])

    def finite(self, u: int, v: int) -> bool:
        return self.d[u, v] < INF

    def to_json(self) -> list[list[int | str]]:
        return [[dist_to_json(x) for x in row] for row in self.d.tolist()]


class GraphClass(BaseModel):
    is_complete: bool
    is_edgeless: bool
    is_connected: bool
    is_union_of_two_cliques: bool
    diameter: int
    universal_vertices: tuple[int, ...]
    isolated_vertices: tuple[int, ...]

    @field_serializer("diameter")
    def _serialize_diameter(self, value: int):
        return dist_to_json(value)


def complement(graph: Graph) -> Graph:
    full = graph.full_mask
    return Graph(graph.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(graph.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.rows + tuple(row << g.n for row in h.rows))


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """
    Subgraph induced on the given vertices, relabeled 0..k-1 in ascending order.
    Returns the subgraph and the map new label -> original vertex.
    """
    kept = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        rows.append(mask_of(index[w] for w in iter_bits(graph.rows[v]) if w in index))
    return Graph(len(kept), tuple(rows)), kept


def reachable_mask(graph: Graph, source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= graph.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def components(graph: Graph) -> list[tuple[int, ...]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    remaining = graph.full_mask
    result = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = reachable_mask(graph, start)
        result.append(tuple(iter_bits(comp)))
        remaining &= ~comp
    return result


def all_pairs_distances(graph: Graph) -> DistMatrix:
    n = graph.n
    d = np.full((n, n), INF, dtype=np.int64)
    for s in range(n):
        d[s, s] = 0
        seen = frontier = 1 << s
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= graph.rows[v]
            frontier = nxt & ~seen
            for v in iter_bits(frontier):
                d[s, v] = level
            seen |= frontier
    d.setflags(write=False)
    return DistMatrix(d)


def parity_distances(graph: Graph) -> tuple[DistMatrix, DistMatrix]:
    """
    Shortest odd and even walk lengths, by BFS on the bipartite double cover.
    Layer parity alternates with BFS level, so each (vertex, parity) state is
    settled the first time its layer reaches it.
    """
    n = graph.n
    odd = np.full((n, n), INF, dtype=np.int64)
    even = np.full((n, n), INF, dtype=np.int64)
    for s in range(n):
        even[s, s] = 0
        seen = [1 << s, 0]
        frontier = 1 << s
        level = 0
        while frontier:
            level += 1
            parity = level & 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= graph.rows[v]
            frontier = nxt & ~seen[parity]
            target = odd if parity else even
            for v in iter_bits(frontier):
                target[s, v] = level
            seen[parity] |= frontier
    odd.setflags(write=False)
    even.setflags(write=False)
    return DistMatrix(odd), DistMatrix(even)


def is_clique(graph: Graph, vertices: Iterable[int]) -> bool:
    mask = mask_of(vertices)
    return all(graph.closed_row(v) & mask == mask for v in iter_bits(mask))


def classify(graph: Graph, dist: DistMatrix | None = None) -> GraphClass:
    n = graph.n
    full = graph.full_mask
    dist = dist if dist is not None else all_pairs_distances(graph)
    comps = components(graph)
    return GraphClass(
        is_complete=all(graph.closed_row(u) == full for u in range(n)),
        is_edgeless=all(row == 0 for row in graph.rows),
        is_connected=len(comps) <= 1,
        is_union_of_two_cliques=len(comps) == 2 and all(is_clique(graph, c) for c in comps),
        diameter=int(dist.d.max()) if n else 0,
        universal_vertices=tuple(u for u in range(n) if graph.closed_row(u) == full),
        isolated_vertices=tuple(u for u in range(n) if graph.rows[u] == 0),
    )
