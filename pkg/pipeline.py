import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from enum import Enum

from langgraph.graph import StateGraph, END
from pydantic import BaseModel
from tqdm import tqdm
from typing_extensions import TypedDict

from config import Config
from errors import ModprodError
from families import ClaimId, ClosedFormClaim, generate
from graph_core import Graph
from srg_builder import SrgGraph, srg_components_are_cliques
from vc_solver import CoverResult, modular_dimension_with_srg


class ClaimStatus(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    NON_OPTIMAL = "non-optimal"
    INVALID = "invalid"
    SKIPPED = "skipped"
    ERROR = "error"


class ClaimReport(BaseModel):
    claim: str
    id: ClaimId
    params: dict[str, int]
    predicted: int | None
    computed: int | None
    match: bool
    status: ClaimStatus
    product_order: int = 0
    srg: dict = {}
    solver: dict = {}
    reason: str | None = None


class GraphState(TypedDict):
    claim: ClosedFormClaim
    budget: float | None
    ceiling: int
    allow_large: bool
    g_graph: Graph | None
    h_graph: Graph | None
    product_order: int
    srg: SrgGraph | None
    result: CoverResult | None
    status: str
    error: str
    report: ClaimReport | None


class VerificationPipeline:
    """
    Checks one closed-form claim: build the factors, guard the product size,
    compute dim_s through the strong resolving graph, compare.
    """

    def __init__(self):
        self.workflow = StateGraph(GraphState)

        self.workflow.add_node("check_claim", self.check_claim)
        self.workflow.add_node("build_factors", self.build_factors)
        self.workflow.add_node("check_size", self.check_size)
        self.workflow.add_node("solve", self.solve)
        self.workflow.add_node("compare", self.compare)

        self.workflow.add_conditional_edges(
            "check_claim",
            self.decide_after_check,
            {"build_factors": "build_factors", "compare": "compare"},
        )
        self.workflow.add_edge("build_factors", "check_size")
        self.workflow.add_conditional_edges(
            "check_size",
            self.decide_after_size,
            {"solve": "solve", "compare": "compare"},
        )
        self.workflow.add_edge("solve", "compare")
        self.workflow.add_edge("compare", END)

        self.workflow.set_entry_point("check_claim")
        self.app = self.workflow.compile()

    def check_claim(self, state: GraphState) -> GraphState:
        claim = state["claim"]
        logging.info(f"🔍 Checking claim {claim.name}")
        if not claim.validity:
            logging.warning(f"⚠️ Claim {claim.name} is outside its hypotheses: {claim.reason}")
            return {**state, "status": ClaimStatus.INVALID.value, "error": claim.reason or ""}
        return state

    def decide_after_check(self, state: GraphState) -> str:
        return "compare" if state["status"] else "build_factors"

    def build_factors(self, state: GraphState) -> GraphState:
        claim = state["claim"]
        try:
            g_graph, h_graph = generate(claim.g), generate(claim.h)
        except ModprodError as e:
            logging.error(f"❌ Could not build factors for {claim.name}: {e}", exc_info=True)
            return {**state, "status": ClaimStatus.ERROR.value, "error": str(e)}
        logging.info(f"📄 Factors: n(G)={g_graph.n}, n(H)={h_graph.n}")
        return {**state, "g_graph": g_graph, "h_graph": h_graph, "product_order": g_graph.n * h_graph.n}

    def check_size(self, state: GraphState) -> GraphState:
        if state["status"]:
            return state
        order = state["product_order"]
        if order > state["ceiling"] and not state["allow_large"]:
            logging.warning(f"⚠️ Product has {order} vertices, above the ceiling of {state['ceiling']}")
            return {
                **state,
                "status": ClaimStatus.SKIPPED.value,
                "error": f"product order {order} exceeds ceiling {state['ceiling']}",
            }
        return state

    def decide_after_size(self, state: GraphState) -> str:
        return "compare" if state["status"] else "solve"

    def solve(self, state: GraphState) -> GraphState:
        logging.info(f"🎯 Solving dim_s on {state['product_order']} product vertices")
        try:
            result, srg = modular_dimension_with_srg(state["g_graph"], state["h_graph"], state["budget"])
        except ModprodError as e:
            logging.error(f"❌ Error computing dim_s: {e}", exc_info=True)
            return {**state, "status": ClaimStatus.ERROR.value, "error": str(e)}
        return {**state, "result": result, "srg": srg}

    def compare(self, state: GraphState) -> GraphState:
        claim, result, srg = state["claim"], state["result"], state["srg"]
        status = state["status"]
        computed = result.size if result is not None else None
        if not status:
            if not result.optimal:
                status = ClaimStatus.NON_OPTIMAL.value
            elif computed == claim.predicted:
                status = ClaimStatus.MATCH.value
            else:
                status = ClaimStatus.MISMATCH.value

        srg_stats = {}
        if srg is not None:
            srg_stats = {
                "vertices": srg.n,
                "edges": len(srg.edges),
                "route": srg.route,
                "cross_checked": srg.cross_checked,
                "clique_components": srg_components_are_cliques(srg),
            }
        solver_stats = {}
        if result is not None:
            solver_stats = {
                "method": result.method,
                "nodes": result.nodes_explored,
                "elapsed": round(result.elapsed, 4),
                "optimal": result.optimal,
                "lower_bound": result.lower_bound,
            }
        report = ClaimReport(
            claim=claim.name,
            id=claim.id,
            params=claim.params,
            predicted=claim.predicted,
            computed=computed,
            match=status == ClaimStatus.MATCH.value,
            status=ClaimStatus(status),
            product_order=state["product_order"],
            srg=srg_stats,
            solver=solver_stats,
            reason=state["error"] or None,
        )
        if report.match:
            logging.info(f"✅ {claim.name}: computed {computed} = predicted {claim.predicted}")
        else:
            logging.warning(f"⚠️ {claim.name}: {status} (computed {computed}, predicted {claim.predicted})")
        return {**state, "report": report}

    def run(
        self,
        claim: ClosedFormClaim,
        budget: float | None = Config.SOLVER_BUDGET_SECONDS,
        ceiling: int | None = None,
        allow_large: bool = False,
    ) -> ClaimReport:
        inputs = {
            "claim": claim,
            "budget": budget,
            "ceiling": ceiling if ceiling is not None else Config.PRODUCT_VERTEX_CEILING,
            "allow_large": allow_large,
            "g_graph": None,
            "h_graph": None,
            "product_order": 0,
            "srg": None,
            "result": None,
            "status": "",
            "error": "",
            "report": None,
        }

        report = None
        for output in self.app.stream(inputs):
            logging.debug(f"📥 Pipeline step: {list(output)}")
            if "compare" in output:
                report = output["compare"]["report"]
        return report


def pipeline_mermaid(pipeline: VerificationPipeline) -> str:
    return pipeline.app.get_graph().draw_mermaid()


def verify_claim(
    claim: ClosedFormClaim,
    budget: float | None = Config.SOLVER_BUDGET_SECONDS,
    ceiling: int | None = None,
    allow_large: bool = False,
) -> ClaimReport:
    return VerificationPipeline().run(claim, budget, ceiling, allow_large)


def run_suite(
    claims: list[ClosedFormClaim],
    threads: int = 1,
    budget: float | None = Config.SOLVER_BUDGET_SECONDS,
    ceiling: int | None = None,
    allow_large: bool = False,
) -> list[ClaimReport]:
    """Runs claims (in parallel when threads > 1); reports come back ordered by claim id."""
    pipeline = VerificationPipeline()
    ordered = sorted(claims, key=lambda c: c.sort_key)
    progress = tqdm(total=len(ordered), desc="claims", disable=not sys.stderr.isatty())

    def work(claim):
        report = pipeline.run(claim, budget, ceiling, allow_large)
        progress.update(1)
        return report

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        reports = list(pool.map(work, ordered))
    progress.close()
    return reports
