"""
Closed-form distances in graph products, the distance-3 and diameter-2
characterizations of the modular product, and its connectivity predicate.
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from pydantic import BaseModel, field_serializer

from errors import PreconditionError
from graph_core import (
    INF,
    DistMatrix,
    Graph,
    GraphClass,
    all_pairs_distances,
    classify,
    components,
    dist_to_json,
    parity_distances,
)
from products import ProductKind
from structure_analysis import gamma_pairs, is_gamma_pair

Pair = tuple[int, int]


class ModularCaseTag(str, Enum):
    BOTH_COMPLETE = "BothComplete"
    ONE_FACTOR_COMPLETE = "OneFactorComplete"
    BOTH_EDGELESS = "BothEdgeless"
    TWO_CLIQUE_UNION = "TwoCliqueUnion"
    TWO_CLIQUE_PAIR_INFINITE = "TwoCliquePairInfinite"
    GENERAL = "General"


class ModularDistanceCase(BaseModel):
    tag: ModularCaseTag
    value: int

    @field_serializer("value")
    def _serialize_value(self, value: int):
        return dist_to_json(value)


@dataclass
class FactorProfile:
    """Per-factor data reused across many distance queries."""

    graph: Graph

    @cached_property
    def dist(self) -> DistMatrix:
        return all_pairs_distances(self.graph)

    @cached_property
    def parity(self) -> tuple[DistMatrix, DistMatrix]:
        return parity_distances(self.graph)

    @cached_property
    def cls(self) -> GraphClass:
        return classify(self.graph, self.dist)

    @cached_property
    def universal(self) -> frozenset[int]:
        return frozenset(self.cls.universal_vertices)

    @cached_property
    def has_gamma_pair(self) -> bool:
        return bool(gamma_pairs(self.graph).pairs)

    @cached_property
    def side(self) -> dict[int, int]:
        return {v: i for i, comp in enumerate(components(self.graph)) for v in comp}


def standard_product_distance(
    kind: ProductKind,
    g_graph: Graph,
    h_graph: Graph,
    first: Pair,
    second: Pair,
    profiles: tuple[FactorProfile, FactorProfile] | None = None,
) -> int:
    kind = ProductKind(kind)
    if kind in (ProductKind.MODULAR, ProductKind.DIRECT_CO_DIRECT):
        raise PreconditionError(f"No closed-form standard distance for the {kind.value} product")
    pg, ph = profiles or (FactorProfile(g_graph), FactorProfile(h_graph))
    (g, h), (g2, h2) = first, second
    dg, dh = pg.dist(g, g2), ph.dist(h, h2)

    if kind is ProductKind.CARTESIAN:
        return INF if max(dg, dh) >= INF else dg + dh
    if kind is ProductKind.STRONG:
        return max(dg, dh)
    if kind is ProductKind.LEXICOGRAPHIC:
        if g != g2:
            return dg
        # an isolated g leaves only moves inside its H-layer
        return dh if g_graph.rows[g] == 0 else min(dh, 2)

    if first == second:
        return 0
    if not (g_graph.rows[g] and g_graph.rows[g2] and h_graph.rows[h] and h_graph.rows[h2]):
        return INF
    (g_odd, g_even), (h_odd, h_even) = pg.parity, ph.parity
    even = max(g_even(g, g2), h_even(h, h2))
    odd = max(g_odd(g, g2), h_odd(h, h2))
    return min(even, odd, INF)


class ModularDistanceCalculator:
    """
    Distances in G<>H from factor data alone, with the dispatch order:
    both factors complete, one factor complete, both unions of two cliques,
    then the general case (0, 1, 3 by the distance-3 test, else 2).
    """

    def __init__(self, g_graph: Graph, h_graph: Graph):
        if g_graph.n < 1 or h_graph.n < 1:
            raise PreconditionError("Product factors must have at least one vertex")
        self.g = FactorProfile(g_graph)
        self.h = FactorProfile(h_graph)

    @property
    def general_case(self) -> bool:
        gc, hc = self.g.cls, self.h.cls
        return not (gc.is_complete or hc.is_complete) and not (
            gc.is_union_of_two_cliques and hc.is_union_of_two_cliques
        )

    def _require_general(self):
        if not self.general_case:
            raise PreconditionError(
                "Needs two non-complete factors that are not both unions of two cliques"
            )

    def adjacent(self, first: Pair, second: Pair) -> bool:
        (g, h), (g2, h2) = first, second
        if first == second:
            return False
        in_g = g == g2 or self.g.graph.adjacent(g, g2)
        in_h = h == h2 or self.h.graph.adjacent(h, h2)
        return in_g == in_h

    def dist3(self, first: Pair, second: Pair) -> bool:
        self._require_general()
        (g, h), (g2, h2) = first, second
        return self._condition(self.g, self.h, g, g2, h, h2) or self._condition(
            self.h, self.g, h, h2, g, g2
        )

    @staticmethod
    def _condition(a: FactorProfile, b: FactorProfile, x: int, x2: int, y: int, y2: int) -> bool:
        if a.graph.closed_row(x) != a.graph.closed_row(x2) or b.dist(y, y2) < 3:
            return False
        return x in a.universal or is_gamma_pair(b.graph, y, y2)

    def distance(self, first: Pair, second: Pair) -> ModularDistanceCase:
        (g, h), (g2, h2) = first, second
        gc, hc = self.g.cls, self.h.cls
        if gc.is_complete and hc.is_complete:
            return ModularDistanceCase(tag=ModularCaseTag.BOTH_COMPLETE, value=int(first != second))
        if gc.is_complete or hc.is_complete:
            value = max(self.g.dist(g, g2), self.h.dist(h, h2))
            return ModularDistanceCase(tag=ModularCaseTag.ONE_FACTOR_COMPLETE, value=value)
        if gc.is_union_of_two_cliques and hc.is_union_of_two_cliques:
            gs, hs = self.g.side, self.h.side
            if gs[g] ^ hs[h] != gs[g2] ^ hs[h2]:
                return ModularDistanceCase(tag=ModularCaseTag.TWO_CLIQUE_PAIR_INFINITE, value=INF)
            return ModularDistanceCase(tag=ModularCaseTag.TWO_CLIQUE_UNION, value=int(first != second))

        tag = ModularCaseTag.BOTH_EDGELESS if gc.is_edgeless and hc.is_edgeless else ModularCaseTag.GENERAL
        if first == second:
            value = 0
        elif self.adjacent(first, second):
            value = 1
        elif self.dist3(first, second):
            value = 3
        else:
            value = 2
        return ModularDistanceCase(tag=tag, value=value)

    def diameter_two(self) -> bool:
        """
        diam(G<>H) = 2 iff no distance-3 pair exists: neither factor has a
        gamma-pair, and a universal vertex in one factor forces diameter at
        most 2 in the other.
        """
        self._require_general()
        if self.g.has_gamma_pair or self.h.has_gamma_pair:
            return False
        if self.g.universal and self.h.cls.diameter > 2:
            return False
        if self.h.universal and self.g.cls.diameter > 2:
            return False
        return True

    def connected(self) -> bool:
        gc, hc = self.g.cls, self.h.cls
        if gc.is_complete and not hc.is_connected or hc.is_complete and not gc.is_connected:
            return False
        return not (gc.is_union_of_two_cliques and hc.is_union_of_two_cliques)

    def diameter(self) -> int:
        gc, hc = self.g.cls, self.h.cls
        if gc.is_complete and hc.is_complete:
            return int(gc.diameter or hc.diameter)
        if gc.is_complete or hc.is_complete:
            return max(gc.diameter, hc.diameter)
        if not self.connected():
            return INF
        return 2 if self.diameter_two() else 3


def modular_distance(g_graph: Graph, h_graph: Graph, first: Pair, second: Pair) -> ModularDistanceCase:
    return ModularDistanceCalculator(g_graph, h_graph).distance(first, second)


def dist3_predicate(g_graph: Graph, h_graph: Graph, first: Pair, second: Pair) -> bool:
    return ModularDistanceCalculator(g_graph, h_graph).dist3(first, second)


def modular_diameter_two(g_graph: Graph, h_graph: Graph) -> bool:
    return ModularDistanceCalculator(g_graph, h_graph).diameter_two()


def modular_connected(g_graph: Graph, h_graph: Graph) -> bool:
    return ModularDistanceCalculator(g_graph, h_graph).connected()


def modular_diameter(g_graph: Graph, h_graph: Graph) -> int:
    return ModularDistanceCalculator(g_graph, h_graph).diameter()
