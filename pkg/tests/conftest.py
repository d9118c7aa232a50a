import pytest
from hypothesis import settings

from data_loader import format_edge_list
from families import cycle, generate, path, star
from graph_core import Graph

settings.register_profile("modprod", deadline=None, max_examples=60)
settings.load_profile("modprod")


@pytest.fixture
def p4():
    return generate(path(4))


@pytest.fixture
def p5():
    return generate(path(5))


@pytest.fixture
def c5():
    return generate(cycle(5))


@pytest.fixture
def k3():
    return Graph.complete(3)


@pytest.fixture
def claw():
    return generate(star(3))


@pytest.fixture
def write_graph(tmp_path):
    """Writes a graph as an edge-list file and returns its path."""

    def _write(graph: Graph, name: str) -> str:
        target = tmp_path / name
        target.write_text(format_edge_list(graph), encoding="utf-8")
        return str(target)

    return _write
