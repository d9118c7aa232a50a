from hypothesis import strategies as st

from graph_core import Graph


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 5) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [pair for pair in pairs if draw(st.booleans())]
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 5) -> Graph:
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.add((u, v))
    return Graph.from_edges(n, edges)
