"""
Parameterized graph families and the closed-form dim_s claims made about
their modular products.
"""
from __future__ import annotations

import logging
from enum import Enum

from pydantic import BaseModel

from errors import FamilyDomainError
from graph_core import Graph, all_pairs_distances, classify, complement, disjoint_union
from structure_analysis import minus_graphs, twin_classes, twin_ordering
from vc_solver import min_vertex_cover, strong_metric_dimension


class FamilyTag(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    EMPTY = "empty"
    COMPLEMENT = "complement"
    CLIQUE_UNION = "clique-union"
    KNN_MINUS_M = "knn-minus-m"
    HSTQ = "hstq"


class FamilySpec(BaseModel):
    """
    A generator and its parameters. Labelings:
      path/cycle: 0..n-1 along the path or cycle;
      star(s): center 0, leaves 1..s;
      clique-union(a, b, ...): cliques in order;
      knn-minus-m(n, q_1..q_n, r_1..r_n): cliques X_1..X_n, then Y_1..Y_n;
      hstq(s, t, q): X, then Y (y_t is s+t-1), then W, then z last.
    """

    tag: FamilyTag
    params: tuple[int, ...] = ()
    inner: FamilySpec | None = None

    @property
    def label(self) -> str:
        p = self.params
        if self.tag is FamilyTag.PATH:
            return f"P_{p[0]}"
        if self.tag is FamilyTag.CYCLE:
            return f"C_{p[0]}"
        if self.tag is FamilyTag.COMPLETE:
            return f"K_{p[0]}"
        if self.tag is FamilyTag.STAR:
            return f"K_{{1,{p[0]}}}"
        if self.tag is FamilyTag.EMPTY:
            return f"co-K_{p[0]}"
        if self.tag is FamilyTag.COMPLEMENT:
            return f"co-({self.inner.label if self.inner else '?'})"
        if self.tag is FamilyTag.CLIQUE_UNION:
            return "+".join(f"K_{a}" for a in p)
        if self.tag is FamilyTag.KNN_MINUS_M:
            n = p[0]
            return f"K_{{{n},{n}}}^-M({','.join(map(str, p[1:n + 1]))};{','.join(map(str, p[n + 1:]))})"
        return f"H({p[0]},{p[1]},{p[2]})"

    def check_domain(self):
        p, tag = self.params, self.tag
        expected = {
            FamilyTag.PATH: 1, FamilyTag.CYCLE: 1, FamilyTag.COMPLETE: 1,
            FamilyTag.STAR: 1, FamilyTag.EMPTY: 1, FamilyTag.HSTQ: 3, FamilyTag.COMPLEMENT: 0,
        }
        if tag in expected and len(p) != expected[tag]:
            raise FamilyDomainError(f"{tag.value} takes {expected[tag]} parameter(s), got {len(p)}")
        if tag in (FamilyTag.PATH, FamilyTag.COMPLETE, FamilyTag.STAR, FamilyTag.EMPTY) and p[0] < 1:
            raise FamilyDomainError(f"{tag.value} needs a positive size")
        if tag is FamilyTag.CYCLE and p[0] < 3:
            raise FamilyDomainError("cycle needs at least 3 vertices")
        if tag is FamilyTag.COMPLEMENT and self.inner is None:
            raise FamilyDomainError("complement needs an inner family")
        if tag is FamilyTag.CLIQUE_UNION and (not p or min(p) < 1):
            raise FamilyDomainError("clique-union needs positive clique sizes")
        if tag is FamilyTag.KNN_MINUS_M:
            if not p or p[0] < 2 or len(p) != 1 + 2 * p[0] or min(p[1:]) < 1:
                raise FamilyDomainError("knn-minus-m takes n >= 2 followed by n q's and n r's, all >= 1")
        if tag is FamilyTag.HSTQ:
            s, t, q = p
            if s < 1 or t < 2 or q < 0:
                raise FamilyDomainError("hstq needs s >= 1, t >= 2, q >= 0")


def path(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.PATH, params=(n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.CYCLE, params=(n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.COMPLETE, params=(n,))


def star(s: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.STAR, params=(s,))


def empty(n: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.EMPTY, params=(n,))


def complement_of(spec: FamilySpec) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.COMPLEMENT, inner=spec)


def clique_union(*sizes: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.CLIQUE_UNION, params=tuple(sizes))


def knn_minus_m(n: int, q: tuple[int, ...] | None = None, r: tuple[int, ...] | None = None) -> FamilySpec:
    q = tuple(q) if q is not None else (1,) * n
    r = tuple(r) if r is not None else (1,) * n
    return FamilySpec(tag=FamilyTag.KNN_MINUS_M, params=(n, *q, *r))


def hstq(s: int, t: int, q: int) -> FamilySpec:
    return FamilySpec(tag=FamilyTag.HSTQ, params=(s, t, q))


def _knn_minus_m_graph(n: int, q: tuple[int, ...], r: tuple[int, ...]) -> Graph:
    blocks, start = [], 0
    for size in q + r:
        blocks.append(range(start, start + size))
        start += size
    edges = []
    for block in blocks:
        edges.extend((a, b) for a in block for b in block if a < b)
    for i in range(n):
        for j in range(n):
            if i != j:
                edges.extend((x, y) for x in blocks[i] for y in blocks[n + j])
    return Graph.from_edges(start, edges)


def _hstq_graph(s: int, t: int, q: int) -> Graph:
    xs = range(s)
    ys = range(s, s + t)
    ws = range(s + t, s + t + q)
    z = s + t + q
    edges = [(x, y) for x in xs for y in ys]
    edges.extend((y, z) for y in ys[:-1])
    edges.extend((w, z) for w in ws)
    return Graph.from_edges(z + 1, edges)


def generate(spec: FamilySpec) -> Graph:
    spec.check_domain()
    p = spec.params
    if spec.tag is FamilyTag.PATH:
        return Graph.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if spec.tag is FamilyTag.CYCLE:
        return Graph.from_edges(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if spec.tag is FamilyTag.COMPLETE:
        return Graph.complete(p[0])
    if spec.tag is FamilyTag.STAR:
        return Graph.from_edges(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if spec.tag is FamilyTag.EMPTY:
        return Graph.empty(p[0])
    if spec.tag is FamilyTag.COMPLEMENT:
        return complement(generate(spec.inner))
    if spec.tag is FamilyTag.CLIQUE_UNION:
        graph = Graph.complete(p[0])
        for size in p[1:]:
            graph = disjoint_union(graph, Graph.complete(size))
        return graph
    if spec.tag is FamilyTag.KNN_MINUS_M:
        n = p[0]
        return _knn_minus_m_graph(n, p[1:n + 1], p[n + 1:])
    return _hstq_graph(*p)


class ClaimId(str, Enum):
    STARS = "stars"
    CYCLE_COMPLEMENTS = "cycle-complements"
    CYCLES = "cycles"
    KNN_MINUS_M = "knn-minus-m"
    KNN_PLAIN = "knn-plain"
    KNN_BLOWUP_PAIR = "knn-blowup-pair"
    KNN_PAIR = "knn-pair"
    P5 = "p5"
    P5_PATH_CYCLE = "p5-path-cycle"
    STAR_HSTQ = "star-hstq"
    COMPLETE_FACTOR = "complete-factor"


CLAIM_ORDER = {claim_id: i for i, claim_id in enumerate(ClaimId)}


class ClosedFormClaim(BaseModel):
    id: ClaimId
    g: FamilySpec
    h: FamilySpec
    params: dict[str, int] = {}
    predicted: int | None = None
    validity: bool = True
    reason: str | None = None

    @property
    def name(self) -> str:
        return f"{self.id.value}: {self.g.label} <> {self.h.label}"

    @property
    def sort_key(self) -> tuple[int, str]:
        return CLAIM_ORDER[self.id], self.name


def star_hstq_b(r: int, q: int, s: int, t: int) -> int:
    """The b term of the K_{1,r} <> H(s,t,q) formula; rows are tried top-down."""
    if r <= q + 1:
        return r + 2
    if r == q + 2 or (r >= q + 3 and max(s + 1, t) >= r):
        return r + 1
    if r >= q + 3 and t <= s < r - 1:
        return q + min(s, r - q)
    return q + min(t - 1, r - q)


def cycle_r_term(s: int, t: int) -> int:
    low = min(s, t)
    if low % 3 in (0, 1):
        return 0
    return 1 if s == t else 2


def _knn_sizes(spec: FamilySpec) -> tuple[int, tuple[int, ...]]:
    n = spec.params[0]
    q, r = spec.params[1:n + 1], spec.params[n + 1:]
    return n, tuple(a + b for a, b in zip(q, r))


def _require(condition: bool, reason: str):
    if not condition:
        raise _Invalid(reason)


class _Invalid(Exception):
    pass


def _predict(claim_id: ClaimId, g: FamilySpec, h: FamilySpec, params: dict[str, int]) -> int:
    if claim_id is ClaimId.STARS:
        s, t = params["s"], params["t"]
        _require(s >= t >= 2, "needs s >= t >= 2")
        return s * t + s - 1 if t == 2 else s * t + s

    if claim_id is ClaimId.CYCLE_COMPLEMENTS:
        s, t = params["s"], params["t"]
        _require(s >= 5 and t >= 5, "needs s, t >= 5")
        if s == t == 5:
            return 20
        return s * t - (s // 2) * (t // 2)

    if claim_id is ClaimId.CYCLES:
        s, t = params["s"], params["t"]
        _require(s >= 7 and t >= 7, "needs s, t >= 7")
        return s * t - 4 * min(s // 3, t // 3) - cycle_r_term(s, t)

    if claim_id in (ClaimId.KNN_MINUS_M, ClaimId.KNN_PLAIN):
        _require(g.tag is FamilyTag.KNN_MINUS_M and g.params[0] >= 3, "G must be K_{n,n}^-M(...) with n >= 3")
        h_graph = generate(h)
        _require(not classify(h_graph).universal_vertices, "H must have no universal vertex")
        n, block_sizes = _knn_sizes(g)
        k = twin_ordering(h_graph).k
        if claim_id is ClaimId.KNN_PLAIN:
            _require(all(size == 2 for size in block_sizes), "needs K_{n,n}^-M with single-vertex blocks")
            return 2 * n * h_graph.n - n * k
        return sum(block_sizes) * h_graph.n - n * k

    if claim_id in (ClaimId.KNN_BLOWUP_PAIR, ClaimId.KNN_PAIR):
        _require(
            g.tag is FamilyTag.KNN_MINUS_M and h.tag is FamilyTag.KNN_MINUS_M,
            "both factors must be K_{n,n}^-M graphs",
        )
        (n, g_sizes), (m, h_sizes) = _knn_sizes(g), _knn_sizes(h)
        _require(n >= 3 and m >= 3, "needs n, m >= 3")
        if claim_id is ClaimId.KNN_PAIR:
            _require(set(g_sizes) | set(h_sizes) == {2}, "needs K_{n,n}^-M factors with single-vertex blocks")
            return 3 * n * m
        return sum(g_sizes) * sum(h_sizes) - n * m

    if claim_id is ClaimId.P5:
        h_graph = generate(h)
        _require(not classify(h_graph).universal_vertices, "H must have no universal vertex")
        _require(
            all(len(c) == 1 for c in twin_classes(h_graph).classes), "H must have no distinct twins"
        )
        k = twin_ordering(h_graph).k
        co_minus = minus_graphs(h_graph).co_minus
        beta = min_vertex_cover(co_minus).size
        return 4 * h_graph.n - 2 * k + beta

    if claim_id is ClaimId.P5_PATH_CYCLE:
        _require(h.tag in (FamilyTag.PATH, FamilyTag.CYCLE), "H must be a path or a cycle")
        r = h.params[0]
        _require(r >= 7, "needs r >= 7")
        return 3 * r - 2

    if claim_id is ClaimId.STAR_HSTQ:
        r, q, s, t = params["r"], params["q"], params["s"], params["t"]
        _require(r >= 3 and q >= 3 and s >= 4 and t >= 4, "needs r, q >= 3 and s, t >= 4")
        return (s + t + q - 1) * r - star_hstq_b(r, q, s, t) + r + q + s + t

    t = params["t"]
    _require(t >= 2, "needs t >= 2")
    g_graph = generate(g)
    g_class = classify(g_graph, all_pairs_distances(g_graph))
    _require(g_class.is_connected and not g_class.is_complete, "G must be connected and not complete")
    return (t - 1) * g_graph.n + strong_metric_dimension(g_graph)


def _factors(
    claim_id: ClaimId, params: dict[str, int], g: FamilySpec | None, h: FamilySpec | None
) -> tuple[FamilySpec, FamilySpec]:
    if claim_id is ClaimId.STARS:
        return star(params["s"]), star(params["t"])
    if claim_id is ClaimId.CYCLE_COMPLEMENTS:
        return complement_of(cycle(params["s"])), complement_of(cycle(params["t"]))
    if claim_id is ClaimId.CYCLES:
        return cycle(params["s"]), cycle(params["t"])
    if claim_id is ClaimId.KNN_PLAIN:
        return knn_minus_m(params["n"]), h
    if claim_id is ClaimId.KNN_PAIR:
        return knn_minus_m(params["n"]), knn_minus_m(params["m"])
    if claim_id in (ClaimId.P5, ClaimId.P5_PATH_CYCLE):
        return path(5), h
    if claim_id is ClaimId.STAR_HSTQ:
        return star(params["r"]), hstq(params["s"], params["t"], params["q"])
    if claim_id is ClaimId.COMPLETE_FACTOR:
        return g, complete(params["t"])
    return g, h


def make_claim(
    claim_id: ClaimId | str,
    params: dict[str, int] | None = None,
    g: FamilySpec | None = None,
    h: FamilySpec | None = None,
) -> ClosedFormClaim:
    claim_id = ClaimId(claim_id)
    params = dict(params or {})
    try:
        g, h = _factors(claim_id, params, g, h)
    except KeyError as e:
        raise FamilyDomainError(f"Claim {claim_id.value} is missing parameter {e}") from None
    if g is None or h is None:
        raise FamilyDomainError(f"Claim {claim_id.value} needs both factor specs")
    g.check_domain()
    h.check_domain()
    try:
        predicted = _predict(claim_id, g, h, params)
    except _Invalid as e:
        logging.info(f"Claim {claim_id.value} outside its hypotheses: {e}")
        return ClosedFormClaim(id=claim_id, g=g, h=h, params=params, validity=False, reason=str(e))
    return ClosedFormClaim(id=claim_id, g=g, h=h, params=params, predicted=predicted)


def predicted_dims(claim: ClosedFormClaim) -> int | None:
    return claim.predicted if claim.validity else None


def claim_from_json(data: dict) -> ClosedFormClaim:
    g = FamilySpec.model_validate(data["g"]) if data.get("g") else None
    h = FamilySpec.model_validate(data["h"]) if data.get("h") else None
    return make_claim(data["id"], data.get("params"), g, h)


def acceptance_suite() -> list[ClosedFormClaim]:
    """Every closed-form value checked at desk scale."""
    return [
        make_claim(ClaimId.STARS, {"s": 3, "t": 2}),
        make_claim(ClaimId.STARS, {"s": 4, "t": 3}),
        make_claim(ClaimId.CYCLE_COMPLEMENTS, {"s": 5, "t": 5}),
        make_claim(ClaimId.CYCLE_COMPLEMENTS, {"s": 5, "t": 6}),
        make_claim(ClaimId.CYCLES, {"s": 7, "t": 7}),
        make_claim(ClaimId.CYCLES, {"s": 7, "t": 8}),
        make_claim(ClaimId.CYCLES, {"s": 8, "t": 8}),
        make_claim(ClaimId.CYCLES, {"s": 8, "t": 9}),
        make_claim(ClaimId.KNN_MINUS_M, g=knn_minus_m(3, (2, 1, 1), (1, 1, 1)), h=cycle(7)),
        make_claim(ClaimId.KNN_PLAIN, {"n": 3}, h=cycle(7)),
        make_claim(ClaimId.KNN_BLOWUP_PAIR, g=knn_minus_m(3, (2, 1, 1), (1, 1, 1)), h=knn_minus_m(3)),
        make_claim(ClaimId.KNN_PAIR, {"n": 3, "m": 3}),
        make_claim(ClaimId.P5, h=cycle(7)),
        make_claim(ClaimId.P5_PATH_CYCLE, h=cycle(7)),
        make_claim(ClaimId.P5_PATH_CYCLE, h=path(7)),
        make_claim(ClaimId.STAR_HSTQ, {"r": 3, "q": 3, "s": 4, "t": 4}),
        make_claim(ClaimId.COMPLETE_FACTOR, {"t": 2}, g=path(4)),
    ]


def quick_suite() -> list[ClosedFormClaim]:
    return [
        make_claim(ClaimId.STARS, {"s": 3, "t": 2}),
        make_claim(ClaimId.STARS, {"s": 4, "t": 3}),
        make_claim(ClaimId.CYCLE_COMPLEMENTS, {"s": 5, "t": 5}),
        make_claim(ClaimId.P5_PATH_CYCLE, h=cycle(7)),
        make_claim(ClaimId.COMPLETE_FACTOR, {"t": 2}, g=path(4)),
    ]


SUITES = {"acceptance": acceptance_suite, "paper": acceptance_suite, "quick": quick_suite}
