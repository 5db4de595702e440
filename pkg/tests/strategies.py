from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from nbperfect.graph import Graph, from_edge_list


@st.composite
def graphs(draw: st.DrawFn, *, min_n: int = 1, max_n: int = 7) -> Graph:
    """
    Labeled graphs with `min_n` to `max_n` vertices.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return from_edge_list(n, (pair for i, pair in enumerate(pairs) if mask >> i & 1))


@st.composite
def trees(draw: st.DrawFn, *, min_n: int = 1, max_n: int = 12) -> Graph:
    """
    Labeled trees: every vertex after the first attaches to an earlier one.
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=v - 1)) for v in range(1, n)]
    return from_edge_list(n, ((v, p) for v, p in zip(range(1, n), parents, strict=True)))


@st.composite
def forests(draw: st.DrawFn, *, max_n: int = 12) -> Graph:
    """
    Labeled forests: trees with some of their edges removed.
    """
    tree = draw(trees(max_n=max_n))
    keep = [draw(st.booleans()) for _ in range(tree.m)]
    return from_edge_list(tree.n, (e for e, k in zip(tree.edges(), keep, strict=True) if k))


def atlas_graphs(max_n: int) -> list[Graph]:
    """
    One graph of every isomorphism class with `1` to `max_n` vertices (`max_n <= 7`).
    """
    return [
        from_edge_list(g.number_of_nodes(), g.edges())
        for g in nx.graph_atlas_g()
        if 0 < g.number_of_nodes() <= max_n
    ]
