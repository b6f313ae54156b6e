from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from intrecon.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_and_perm(draw, min_n: int = 0, max_n: int = 7) -> tuple[Graph, list[int]]:
    g = draw(graphs(min_n, max_n))
    return g, draw(st.permutations(list(range(g.n))))


@st.composite
def interval_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """Graphs of random integer intervals on a small line."""
    n = draw(st.integers(min_n, max_n))
    ivs = []
    for _ in range(n):
        a = draw(st.integers(0, 2 * n))
        b = draw(st.integers(0, 2 * n))
        ivs.append((min(a, b), max(a, b)))
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if ivs[u][0] <= ivs[v][1] and ivs[v][0] <= ivs[u][1]]
    return Graph.from_edges(n, edges)
