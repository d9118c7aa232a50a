"""
Exact minimum vertex cover through maximum independent set branch and bound,
and the strong metric dimension as the vertex cover number of the strong
resolving graph.
"""
import logging
import time

from pydantic import BaseModel

from config import Config
from errors import CoverWitnessError, DisconnectedGraphError, SizeGuardError
from graph_core import Graph, iter_bits, mask_of
from metric_formulas import ModularDistanceCalculator
from srg_builder import SrgGraph, srg_dispatch, srg_oracle

BRUTE_FORCE_LIMIT = 26
_DEADLINE_CHECK_MASK = 255


class CoverResult(BaseModel):
    size: int
    witness: tuple[int, ...] | None
    nodes_explored: int = 0
    elapsed: float = 0.0
    optimal: bool = True
    lower_bound: int = 0
    method: str = "branch-and-bound"


class _BudgetExhausted(Exception):
    pass


def _reduce(graph: Graph, alive: int) -> tuple[int, int, int]:
    """
    Isolated, pendant and dominated-vertex rules. Returns (cover, independent,
    alive) where cover/independent are forced choices for some optimum.
    """
    cover = independent = 0
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if not alive >> v & 1:
                continue
            nbrs = graph.rows[v] & alive
            degree = nbrs.bit_count()
            if degree == 0:
                independent |= 1 << v
                alive &= ~(1 << v)
                changed = True
            elif degree == 1:
                independent |= 1 << v
                cover |= nbrs
                alive &= ~((1 << v) | nbrs)
                changed = True
        if changed:
            continue
        # N[u] within N[v] for adjacent u, v: some optimum keeps v out of the independent set
        for u in iter_bits(alive):
            closed_u = (graph.rows[u] | (1 << u)) & alive
            for v in iter_bits(graph.rows[u] & alive):
                if closed_u & ~(graph.rows[v] | (1 << v)) == 0:
                    cover |= 1 << v
                    alive &= ~(1 << v)
                    changed = True
                    break
            if changed:
                break
    return cover, independent, alive


class _IndependentSetSearch:
    """
    Branch and bound over local vertex indices, highest degree first. The bound
    is a greedy clique cover of the candidate set: an independent set meets each
    clique at most once.
    """

    def __init__(self, graph: Graph, alive: int, deadline: float | None):
        vertices = sorted(iter_bits(alive), key=lambda v: (-(graph.rows[v] & alive).bit_count(), v))
        index = {v: i for i, v in enumerate(vertices)}
        self.vertices = vertices
        self.adj = [mask_of(index[w] for w in iter_bits(graph.rows[v] & alive)) for v in vertices]
        self.deadline = deadline
        self.nodes = 0
        self.best: list[int] = []

    def clique_cover(self, candidates: int) -> tuple[list[int], list[int]]:
        order, bounds = [], []
        color = 0
        rest = candidates
        while rest:
            color += 1
            pool = rest
            while pool:
                low = pool & -pool
                v = low.bit_length() - 1
                rest &= ~low
                pool &= self.adj[v]
                order.append(v)
                bounds.append(color)
        return order, bounds

    def greedy(self) -> list[int]:
        chosen = []
        candidates = (1 << len(self.vertices)) - 1
        while candidates:
            v = min(iter_bits(candidates), key=lambda x: ((self.adj[x] & candidates).bit_count(), x))
            chosen.append(v)
            candidates &= ~self.adj[v] & ~(1 << v)
        return chosen

    def expand(self, candidates: int, chosen: list[int]):
        self.nodes += 1
        if self.deadline is not None and self.nodes & _DEADLINE_CHECK_MASK == 0:
            if time.perf_counter() > self.deadline:
                raise _BudgetExhausted
        order, bounds = self.clique_cover(candidates)
        for i in range(len(order) - 1, -1, -1):
            if len(chosen) + bounds[i] <= len(self.best):
                return
            v = order[i]
            chosen.append(v)
            rest = candidates & ~self.adj[v] & ~(1 << v)
            if rest:
                self.expand(rest, chosen)
            elif len(chosen) > len(self.best):
                self.best = list(chosen)
            chosen.pop()
            candidates &= ~(1 << v)

    def solve(self) -> tuple[int, bool, int]:
        """Returns (independent set mask in original labels, completed, clique-cover bound)."""
        full = (1 << len(self.vertices)) - 1
        self.best = self.greedy()
        root_cliques = self.clique_cover(full)[1][-1] if self.vertices else 0
        completed = True
        if len(self.best) < root_cliques:
            try:
                self.expand(full, [])
            except _BudgetExhausted:
                completed = False
        return mask_of(self.vertices[i] for i in self.best), completed, root_cliques


def _max_independent(graph: Graph, alive: int, deadline: float | None) -> tuple[int, int, bool, int, int]:
    """Maximum independent set of graph[alive]: (mask, forced cover, completed, nodes, bound on alpha)."""
    cover, independent, rest = _reduce(graph, alive)
    search = _IndependentSetSearch(graph, rest, deadline)
    core, completed, root_cliques = search.solve()
    return independent | core, cover, completed, search.nodes, independent.bit_count() + root_cliques


def min_vertex_cover(
    graph: Graph, budget: float | None = Config.SOLVER_BUDGET_SECONDS, canonical: bool = False
) -> CoverResult:
    start = time.perf_counter()
    deadline = start + budget if budget is not None else None
    active = mask_of(v for v in range(graph.n) if graph.rows[v])

    independent, _, completed, nodes, alpha_bound = _max_independent(graph, active, deadline)
    witness_mask = active & ~independent
    lower_bound = active.bit_count() - alpha_bound

    if canonical and completed:
        witness_mask, extra_nodes, completed = _canonical_cover(graph, active, witness_mask.bit_count(), deadline)
        nodes += extra_nodes

    witness = tuple(iter_bits(witness_mask))
    for u, v in graph.edges():
        if not (witness_mask >> u & 1 or witness_mask >> v & 1):
            raise CoverWitnessError(f"Cover witness leaves edge {u} {v} uncovered")

    elapsed = time.perf_counter() - start
    if completed:
        lower_bound = len(witness)
    else:
        logging.warning(f"⚠️ Vertex cover budget of {budget}s exhausted after {nodes} nodes; returning bounds")
    logging.info(f"Vertex cover: size={len(witness)}, nodes={nodes}, elapsed={elapsed:.3f}s, optimal={completed}")
    return CoverResult(
        size=len(witness),
        witness=witness,
        nodes_explored=nodes,
        elapsed=elapsed,
        optimal=completed,
        lower_bound=lower_bound,
    )


def _canonical_cover(graph: Graph, active: int, beta: int, deadline: float | None) -> tuple[int, int, bool]:
    """
    Lexicographically smallest optimal cover: scanning vertices upward, put a
    vertex in the cover whenever an optimum with all earlier decisions survives.
    """
    cover = 0
    alive = active
    nodes = 0
    for v in iter_bits(active):
        if not alive >> v & 1:
            continue
        trial = alive & ~(1 << v)
        independent, _, completed, used, _ = _max_independent(graph, trial, deadline)
        nodes += used
        if not completed:
            return cover | (alive & ~independent), nodes, False
        if cover.bit_count() + 1 + trial.bit_count() - independent.bit_count() == beta:
            cover |= 1 << v
            alive = trial
        else:
            nbrs = graph.rows[v] & alive
            cover |= nbrs
            alive &= ~(nbrs | (1 << v))
    return cover, nodes, True


def _independent_count(graph: Graph, vertices: list[int]) -> int:
    best = 0

    def grow(start: int, allowed: int, size: int):
        nonlocal best
        best = max(best, size)
        for j in range(start, len(vertices)):
            v = vertices[j]
            if allowed >> v & 1:
                grow(j + 1, allowed & ~graph.rows[v], size + 1)

    grow(0, mask_of(vertices), 0)
    return best


def brute_force_vc(graph: Graph) -> int:
    """Exhaustive enumeration of independent sets over the non-isolated vertices."""
    vertices = [v for v in range(graph.n) if graph.rows[v]]
    if len(vertices) > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(
            f"brute_force_vc handles at most {BRUTE_FORCE_LIMIT} non-isolated vertices, got {len(vertices)}"
        )
    return len(vertices) - _independent_count(graph, vertices)


def independence_number(graph: Graph) -> int:
    isolated = [v for v in range(graph.n) if not graph.rows[v]]
    vertices = [v for v in range(graph.n) if graph.rows[v]]
    if len(vertices) > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"independence_number is exhaustive; {len(vertices)} vertices is too many")
    return len(isolated) + _independent_count(graph, vertices)


def strong_metric_dimension_result(
    graph: Graph, budget: float | None = Config.SOLVER_BUDGET_SECONDS, canonical: bool = False
) -> CoverResult:
    srg = srg_oracle(graph)
    return min_vertex_cover(srg.to_graph(), budget, canonical)


def strong_metric_dimension(graph: Graph) -> int:
    return strong_metric_dimension_result(graph).size


def modular_dimension_with_srg(
    g_graph: Graph, h_graph: Graph, budget: float | None = Config.SOLVER_BUDGET_SECONDS, canonical: bool = False
) -> tuple[CoverResult, SrgGraph | None]:
    """
    dim_s(G<>H) together with the strong resolving graph it was read from.
    With exactly one complete factor K_t the value is (t - 1) n(G) + dim_s(G)
    and no product SRG is built.
    """
    calc = ModularDistanceCalculator(g_graph, h_graph)
    if not calc.connected():
        raise DisconnectedGraphError("dim_s needs a connected modular product")
    g_complete, h_complete = calc.g.cls.is_complete, calc.h.cls.is_complete
    if g_complete != h_complete:
        other, t = (g_graph, h_graph.n) if h_complete else (h_graph, g_graph.n)
        start = time.perf_counter()
        inner = strong_metric_dimension_result(other, budget)
        size = (t - 1) * other.n + inner.size
        logging.info(f"Complete-factor formula: ({t}-1)*{other.n} + {inner.size} = {size}")
        result = CoverResult(
            size=size,
            witness=None,
            nodes_explored=inner.nodes_explored,
            elapsed=time.perf_counter() - start,
            optimal=inner.optimal,
            lower_bound=(t - 1) * other.n + inner.lower_bound,
            method="complete-factor formula",
        )
        return result, None

    srg = srg_dispatch(g_graph, h_graph)
    result = min_vertex_cover(srg.to_graph(), budget, canonical)
    return result.model_copy(update={"method": f"srg-{srg.route}"}), srg


def strong_metric_dimension_modular(
    g_graph: Graph, h_graph: Graph, budget: float | None = Config.SOLVER_BUDGET_SECONDS, canonical: bool = False
) -> CoverResult:
    return modular_dimension_with_srg(g_graph, h_graph, budget, canonical)[0]
