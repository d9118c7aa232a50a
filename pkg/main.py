import logging
import sys
from itertools import combinations

import click
import orjson
from pydantic import BaseModel

from config import Config
from data_loader import GraphLoader, format_edge_list
from errors import ModprodError
from families import FamilySpec, FamilyTag, SUITES, claim_from_json, complement_of, generate
from graph_core import all_pairs_distances, classify, dist_to_json
from metric_formulas import ModularDistanceCalculator, modular_diameter, standard_product_distance
from pipeline import ClaimStatus, VerificationPipeline, pipeline_mermaid, run_suite
from products import PairCode, ProductKind, build_product
from selftest import run_selftest
from srg_builder import srg_components_are_cliques, srg_dispatch, srg_oracle
from structure_analysis import (
    TwinKind,
    boundary_vertices,
    gamma_pairs,
    gp_graph,
    minus_graphs,
    twin_classes,
    twin_ordering,
)
from vc_solver import min_vertex_cover, strong_metric_dimension_modular

SCHEMA_VERSION = 1
EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_NON_OPTIMAL = 0, 1, 2, 3

loader = GraphLoader()


class RunConfig(BaseModel):
    """Everything needed to reproduce a run."""

    command: str
    options: dict = {}
    threads: int
    seed: int
    budget: float
    ceiling: int
    allow_large: bool
    log_level: str


def _emit(ctx: click.Context, payload: dict, out: str | None = None):
    run: RunConfig = ctx.obj.model_copy(update={"command": ctx.info_name, "options": dict(ctx.params)})
    document = {"schema": SCHEMA_VERSION, "run": run.model_dump(mode="json"), **payload}
    if out:
        loader.save_json(document, out)
    else:
        click.echo(loader.dump_json(document).decode())


class ModprodGroup(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (ModprodError, FileNotFoundError) as e:
            raise click.ClickException(str(e)) from e


@click.group(cls=ModprodGroup)
@click.option("--log-level", default=Config.LOG_LEVEL, show_default=True,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False))
@click.option("--threads", default=Config.THREADS, show_default=True, type=click.IntRange(min=1))
@click.option("--seed", default=Config.RANDOM_SEED, show_default=True, type=int)
@click.option("--budget", default=Config.SOLVER_BUDGET_SECONDS, show_default=True,
              type=click.FloatRange(min=0, min_open=True), help="Solver budget in seconds per instance.")
@click.option("--ceiling", default=Config.PRODUCT_VERTEX_CEILING, show_default=True,
              type=click.IntRange(min=1), help="Largest product order verify will build.")
@click.option("--allow-large", is_flag=True, help="Verify claims above the ceiling.")
@click.pass_context
def cli(ctx, log_level, threads, seed, budget, ceiling, allow_large):
    """Modular products of graphs: distances, strong resolving graphs and dim_s."""
    logging.basicConfig(
        level=log_level.upper(), format="%(asctime)s - %(levelname)s - %(message)s", force=True
    )
    ctx.obj = RunConfig(
        command="",
        threads=threads,
        seed=seed,
        budget=budget,
        ceiling=ceiling,
        allow_large=allow_large,
        log_level=log_level.upper(),
    )


GRAPH_FILE = click.Path(exists=True, dir_okay=False)
KINDS = click.Choice([k.value for k in ProductKind])


@cli.command()
@click.option("--kind", required=True, type=KINDS)
@click.option("--g", "g_path", required=True, type=GRAPH_FILE)
@click.option("--h", "h_path", required=True, type=GRAPH_FILE)
@click.option("--out", type=click.Path(dir_okay=False))
def product(kind, g_path, h_path, out):
    """Build a product and write it as an edge list."""
    graph = build_product(ProductKind(kind), loader.load_edge_list(g_path), loader.load_edge_list(h_path))
    if out:
        loader.save_edge_list(graph, out)
    else:
        click.echo(format_edge_list(graph), nl=False)


@cli.command()
@click.option("--kind", default=ProductKind.MODULAR.value, show_default=True, type=KINDS)
@click.option("--g", "g_path", required=True, type=GRAPH_FILE)
@click.option("--h", "h_path", required=True, type=GRAPH_FILE)
@click.option("--pair", type=(int, int, int, int), help="g h g' h'")
@click.option("--all", "all_pairs", is_flag=True, help="Every unordered pair of product vertices.")
@click.pass_context
def dist(ctx, kind, g_path, h_path, pair, all_pairs):
    """Closed-form product distances next to BFS."""
    kind = ProductKind(kind)
    if kind is ProductKind.DIRECT_CO_DIRECT:
        raise click.UsageError("The direct-co-direct product has no closed-form distance here.")
    if not pair and not all_pairs:
        raise click.UsageError("Give --pair g h g' h' or --all.")
    g_graph, h_graph = loader.load_edge_list(g_path), loader.load_edge_list(h_path)
    code = PairCode(g_graph.n, h_graph.n)
    if pair:
        for vertex, bound in zip(pair, (g_graph.n, h_graph.n) * 2):
            if not 0 <= vertex < bound:
                raise click.UsageError(f"Vertex {vertex} out of range")
        queries = [((pair[0], pair[1]), (pair[2], pair[3]))]
    else:
        queries = [(code.decode(u), code.decode(v)) for u, v in combinations(range(code.size), 2)]

    bfs = all_pairs_distances(build_product(kind, g_graph, h_graph))
    calc = ModularDistanceCalculator(g_graph, h_graph) if kind is ProductKind.MODULAR else None
    records = []
    for a, b in queries:
        if calc is not None:
            case = calc.distance(a, b)
            value, tag = case.value, case.tag.value
        else:
            value, tag = standard_product_distance(kind, g_graph, h_graph, a, b), kind.value
        actual = bfs(code.encode(*a), code.encode(*b))
        records.append({
            "pair": [list(a), list(b)],
            "closed_form": dist_to_json(value),
            "bfs": dist_to_json(actual),
            "case_tag": tag,
        })
    mismatches = sum(r["closed_form"] != r["bfs"] for r in records)
    _emit(ctx, {"records": records, "mismatches": mismatches})
    if mismatches:
        ctx.exit(EXIT_MISMATCH)


@cli.command()
@click.option("--g", "g_path", required=True, type=GRAPH_FILE)
@click.pass_context
def analyze(ctx, g_path):
    """Twins, gamma-pairs, GP/G- and boundary vertices of a graph."""
    graph = loader.load_edge_list(g_path)
    dist_matrix = all_pairs_distances(graph)
    graph_class = classify(graph, dist_matrix)
    minus = minus_graphs(graph)
    payload = {
        "class": graph_class.model_dump(mode="json"),
        "closed_twins": [list(c) for c in twin_classes(graph, TwinKind.CLOSED).classes],
        "false_twins": [list(c) for c in twin_classes(graph, TwinKind.OPEN).classes],
        "gamma_pairs": [list(p) for p in gamma_pairs(graph).pairs],
        "gp_edges": [list(e) for e in gp_graph(graph).edges()],
        "minus": {
            "vertex_map": list(minus.vertex_map),
            "edges": [list(e) for e in minus.minus.edges()],
            "complement_edges": [list(e) for e in minus.co_minus.edges()],
        },
        "twin_ordering": twin_ordering(graph).model_dump(mode="json"),
        "universal_vertices": list(graph_class.universal_vertices),
        "boundary_vertices": list(boundary_vertices(graph, dist_matrix)) if graph_class.is_connected else None,
    }
    _emit(ctx, payload)


@cli.command()
@click.option("--g", "g_path", required=True, type=GRAPH_FILE)
@click.option("--h", "h_path", required=True, type=GRAPH_FILE)
@click.option("--method", default="auto", show_default=True, type=click.Choice(["oracle", "auto"]))
@click.option("--out", type=click.Path(dir_okay=False), help="Edge list; reasons go to <out>.json.")
@click.pass_context
def srg(ctx, g_path, h_path, method, out):
    """Strong resolving graph of G<>H."""
    g_graph, h_graph = loader.load_edge_list(g_path), loader.load_edge_list(h_path)
    if method == "oracle":
        result = srg_oracle(build_product(ProductKind.MODULAR, g_graph, h_graph))
    else:
        result = srg_dispatch(g_graph, h_graph)
    sidecar = {
        "route": result.route,
        "cross_checked": result.cross_checked,
        "clique_components": srg_components_are_cliques(result),
        "edges": [[e.u, e.v, e.reason.value] for e in result.edges],
    }
    if out:
        loader.save_edge_list(result.to_graph(), out)
        _emit(ctx, sidecar, out + ".json")
    else:
        _emit(ctx, sidecar)


@cli.command()
@click.option("--g", "g_path", required=True, type=GRAPH_FILE)
@click.option("--h", "h_path", type=GRAPH_FILE)
@click.option("--canonical", is_flag=True, help="Lexicographically smallest optimal witness.")
@click.pass_context
def dims(ctx, g_path, h_path, canonical):
    """Strong metric dimension of G, or of G<>H when --h is given."""
    budget = ctx.obj.budget
    g_graph = loader.load_edge_list(g_path)
    if h_path:
        h_graph = loader.load_edge_list(h_path)
        result = strong_metric_dimension_modular(g_graph, h_graph, budget, canonical)
        extra = {"diameter": dist_to_json(modular_diameter(g_graph, h_graph))}
    else:
        result = min_vertex_cover(srg_oracle(g_graph).to_graph(), budget, canonical)
        extra = {}
    _emit(ctx, {
        "dims": result.size,
        "witness": list(result.witness) if result.witness is not None else None,
        "optimal": result.optimal,
        "lower_bound": result.lower_bound,
        "elapsed": round(result.elapsed, 4),
        "method": result.method,
        **extra,
    })
    if not result.optimal:
        ctx.exit(EXIT_NON_OPTIMAL)


@cli.command()
@click.option("--family", required=True, type=click.Choice([t.value for t in FamilyTag if t is not FamilyTag.COMPLEMENT]))
@click.option("--params", required=True, help="Space or comma separated integers.")
@click.option("--complement", is_flag=True, help="Write the complement of the generated graph.")
@click.option("--out", type=click.Path(dir_okay=False))
def gen(family, params, complement, out):
    """Generate a family member as an edge list."""
    try:
        values = tuple(int(p) for p in params.replace(",", " ").split())
    except ValueError:
        raise click.UsageError(f"--params must be integers, got {params!r}") from None
    spec = FamilySpec(tag=FamilyTag(family), params=values)
    if complement:
        spec = complement_of(spec)
    graph = generate(spec)
    if out:
        loader.save_edge_list(graph, out)
    else:
        click.echo(format_edge_list(graph), nl=False)


@cli.command()
@click.option("--suite", type=click.Choice(sorted(SUITES)))
@click.option("--claim", "claim_json", help='JSON claim, e.g. {"id": "cycles", "params": {"s": 7, "t": 7}}.')
@click.option("--json", "json_out", type=click.Path(dir_okay=False), help="Write the JSON report here.")
@click.option("--mermaid", is_flag=True, help="Print the verification pipeline graph and exit.")
@click.pass_context
def verify(ctx, suite, claim_json, json_out, mermaid):
    """Compare closed-form dim_s claims with the computed pipeline."""
    if mermaid:
        click.echo(pipeline_mermaid(VerificationPipeline()))
        return
    if bool(suite) == bool(claim_json):
        raise click.UsageError("Give exactly one of --suite or --claim.")
    if suite:
        claims = SUITES[suite]()
    else:
        try:
            claims = [claim_from_json(orjson.loads(claim_json))]
        except (orjson.JSONDecodeError, KeyError, TypeError) as e:
            raise click.UsageError(f"Bad --claim JSON: {e}") from None

    run = ctx.obj
    reports = run_suite(claims, run.threads, run.budget, run.ceiling, run.allow_large)
    width = max(len(r.claim) for r in reports)
    click.echo(f"{'claim'.ljust(width)}  predicted  computed  status")
    for r in reports:
        predicted = "-" if r.predicted is None else str(r.predicted)
        computed = "-" if r.computed is None else str(r.computed)
        click.echo(f"{r.claim.ljust(width)}  {predicted:>9}  {computed:>8}  {r.status.value}")

    payload = {"reports": [r.model_dump(mode="json") for r in reports]}
    if json_out:
        _emit(ctx, payload, json_out)

    statuses = {r.status for r in reports}
    if statuses - {ClaimStatus.MATCH, ClaimStatus.NON_OPTIMAL}:
        ctx.exit(EXIT_MISMATCH)
    if ClaimStatus.NON_OPTIMAL in statuses:
        ctx.exit(EXIT_NON_OPTIMAL)


@cli.command()
@click.option("--quick", is_flag=True, help="Smaller corpora.")
@click.pass_context
def selftest(ctx, quick):
    """Property suites: distance oracle, SRG builders, twins, solver audit."""
    results = run_selftest(quick=quick, threads=ctx.obj.threads, seed=ctx.obj.seed)
    for name, failures in results.items():
        click.echo(f"{name}: {'ok' if not failures else f'{len(failures)} failure(s)'}")
        for failure in failures[:5]:
            click.echo(f"  {failure}")
    if any(results.values()):
        ctx.exit(EXIT_MISMATCH)


def main(argv=None) -> int:
    try:
        code = cli.main(args=argv, prog_name="modprod", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
