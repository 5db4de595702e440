from itertools import combinations

import networkx as nx
import pytest
from hypothesis import assume, given, settings

from nbperfect.families import complete, cycle, edgeless, path
from nbperfect.graph import Graph, complement, from_edge_list, to_networkx
from nbperfect.oracle import brute_param
from nbperfect.treekit import (
    TreeError,
    complement_ni_pair,
    cotree_ni_pair,
    total_dom_pair,
    tree_alpha,
    tree_alpha2,
    tree_diameter_path,
    tree_domination,
    tree_induced_matching,
    tree_longest_path,
    tree_matching_cover,
)
from nbperfect.validator import (
    is_2_independent,
    is_dominating,
    is_total_dominating,
    is_independent,
    is_matching,
    is_neighborhood_independent,
    is_vertex_cover,
)

from .strategies import atlas_graphs, forests, trees


def _star(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def _is_induced_matching(graph: Graph, edges: list[tuple[int, int]]) -> bool:
    if not is_matching(graph, edges):
        return False

    return not any(
        graph.has_edge(a, b) for e, f in combinations(edges, 2) for a in e for b in f
    )


def _brute_induced_matching(graph: Graph) -> int:
    edges = list(graph.edges())
    for k in range(len(edges), 0, -1):
        if any(_is_induced_matching(graph, list(chosen)) for chosen in combinations(edges, k)):
            return k
    return 0


def _has_total_dom_pair(graph: Graph) -> bool:
    full = set(graph.vertices())
    return any(
        graph.neighbor_set(x) | graph.neighbor_set(y) == full for x, y in combinations(graph.vertices(), 2)
    )


class TestMatchingCover:
    @pytest.mark.parametrize(
        ("graph", "size"),
        (
            (path(4), 2),
            (_star(3), 1),
            (complete(1), 0),
        ),
    )
    def test_examples(self, *, graph: Graph, size: int) -> None:
        matching, cover = tree_matching_cover(graph)
        assert len(matching) == len(cover) == size
        assert is_matching(graph, matching)
        assert is_vertex_cover(graph, cover)

    def test_cycle_is_rejected(self) -> None:
        with pytest.raises(TreeError):
            tree_matching_cover(cycle(4))


@pytest.mark.parametrize(
    ("graph", "gamma", "alpha"),
    (
        (path(4), 2, 2),
        (_star(5), 1, 5),
        (path(6), 2, 3),
    ),
)
def test_domination_and_independence(*, graph: Graph, gamma: int, alpha: int) -> None:
    dominating = tree_domination(graph)
    independent = tree_alpha(graph)
    assert len(dominating) == gamma
    assert len(independent) == alpha
    assert is_dominating(graph, dominating)
    assert is_independent(graph, independent)


@pytest.mark.parametrize(("graph", "size"), ((path(3), 1), (path(6), 2), (complete(1), 1), (path(7), 3)))
def test_alpha2(*, graph: Graph, size: int) -> None:
    chosen = tree_alpha2(graph)
    assert len(chosen) == size
    assert is_2_independent(graph, chosen)


class TestPaths:
    @pytest.mark.parametrize(
        ("graph", "length"),
        (
            (path(6), 6),
            (_star(4), 3),
            (from_edge_list(5, [(0, 1), (1, 2), (2, 3), (1, 4)]), 4),
            (complete(1), 1),
        ),
    )
    def test_longest_path(self, *, graph: Graph, length: int) -> None:
        assert tree_longest_path(graph) == length

    def test_diameter_path_is_a_path(self) -> None:
        graph = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6)])
        found = tree_diameter_path(graph)
        assert len(found) == 6
        assert all(graph.has_edge(u, v) for u, v in zip(found, found[1:], strict=False))

    @pytest.mark.parametrize("graph", (edgeless(2), cycle(3), edgeless(0)))
    def test_not_a_tree(self, graph: Graph) -> None:
        with pytest.raises(TreeError):
            tree_diameter_path(graph)


@pytest.mark.parametrize(
    ("graph", "size"),
    (
        (path(6), 2),
        (from_edge_list(6, [(0, 1), (2, 3), (4, 5)]), 3),
        (_star(5), 1),
    ),
)
def test_induced_matching(*, graph: Graph, size: int) -> None:
    matching = tree_induced_matching(graph)
    assert len(matching) == size
    assert _is_induced_matching(graph, matching)


class TestTotalDomPair:
    def test_path(self, p4: Graph) -> None:
        assert total_dom_pair(p4) == (1, 2)

    def test_star(self) -> None:
        assert total_dom_pair(_star(3)) == (0, 1)

    def test_long_path(self) -> None:
        assert total_dom_pair(path(7)) is None

    @pytest.mark.parametrize("graph", (complete(1), cycle(3)))
    def test_invalid(self, graph: Graph) -> None:
        with pytest.raises(TreeError):
            total_dom_pair(graph)


class TestComplementPair:
    def test_path_complement(self) -> None:
        graph = complement(path(6))
        pair = cotree_ni_pair(graph)
        assert pair is not None
        assert is_neighborhood_independent(graph, list(pair))

    def test_star_complement(self) -> None:
        assert cotree_ni_pair(complement(_star(4))) is None

    def test_long_inner_path(self) -> None:
        assert complement_ni_pair(path(9)) is None

    def test_leaf_on_central_vertex(self) -> None:
        edges = [(i, i + 1) for i in range(6)]
        edges.append((3, 7))
        assert complement_ni_pair(from_edge_list(8, edges)) is None
        assert complement_ni_pair(path(7)) is not None

    def test_not_a_tree(self) -> None:
        with pytest.raises(TreeError):
            complement_ni_pair(cycle(4))


@settings(max_examples=300, deadline=None)
@given(forests(max_n=12))
def test_forest_routines_match_brute_force(forest: Graph) -> None:
    matching, cover = tree_matching_cover(forest)
    assert len(matching) == brute_param(forest, "nu")[0]
    assert len(cover) == brute_param(forest, "tau")[0]
    assert len(tree_domination(forest)) == brute_param(forest, "gamma")[0]
    assert len(tree_alpha(forest)) == brute_param(forest, "alpha")[0]
    assert len(tree_alpha2(forest)) == brute_param(forest, "a2")[0]
    assert len(tree_induced_matching(forest)) == _brute_induced_matching(forest)


@settings(max_examples=300, deadline=None)
@given(trees(min_n=2, max_n=10))
def test_tree_pairs_match_brute_force(tree: Graph) -> None:
    # The complement of a star is disconnected, it never occurs as a co-tree-like node.
    assume(max(tree.degree(v) for v in tree.vertices()) < tree.n - 1)
    assert (total_dom_pair(tree) is not None) == _has_total_dom_pair(tree)

    graph = complement(tree)
    pair = complement_ni_pair(tree)
    expected = brute_param(graph, "an")[0] >= 2
    assert (pair is not None) == expected
    if pair is not None:
        assert is_neighborhood_independent(graph, list(pair))


@settings(max_examples=200, deadline=None)
@given(trees(max_n=12))
def test_longest_path_matches_networkx(tree: Graph) -> None:
    lengths = dict(nx.all_pairs_shortest_path_length(to_networkx(tree)))
    assert tree_longest_path(tree) == 1 + max(max(row.values()) for row in lengths.values())


@settings(max_examples=1000, deadline=None)
@given(trees(min_n=2, max_n=12))
def test_total_domination_lower_bound(tree: Graph) -> None:
    leaves = sum(1 for v in tree.vertices() if tree.degree(v) == 1)
    gamma_t, dominating = brute_param(tree, "gamma_t")
    assert is_total_dominating(tree, list(dominating))  # type: ignore[arg-type]
    assert 2 * gamma_t >= tree.n + 2 - leaves


def test_2_independent_pairs_total_dominate_the_complement() -> None:
    for graph in atlas_graphs(6):
        other = complement(graph)
        for pair in combinations(graph.vertices(), 2):
            assert is_2_independent(graph, pair) == is_total_dominating(other, pair), (
                list(graph.edges()),
                pair,
            )
