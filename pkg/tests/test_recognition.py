import time
from collections.abc import Callable

import networkx as nx
import pytest
from hypothesis import given, settings

from nbperfect.decomposition import decompose
from nbperfect.families import (
    complete,
    cycle,
    edgeless,
    fatten,
    named,
    path,
    random_p4tidy,
    random_tree,
    random_treecograph,
    spider,
)
from nbperfect.graph import Graph, complement, from_edge_list, induced, join_all, to_networkx
from nbperfect.oracle import (
    brute_is_np,
    contains_induced,
    is_p4_tidy_by_definition,
    is_tree_cograph_by_definition,
)
from nbperfect.recognition import (
    UnsupportedClassError,
    Witness,
    c4_flags,
    classify,
    recognize,
    recognize_p4tidy,
    recognize_treecograph,
    tc_flags,
)

from .strategies import graphs

_patterns: dict[str, Graph] = {
    "3K2bar": named("3K2bar"),
    "3sun": named("3sun"),
    "C5": cycle(5),
    "P6+3K1": named("P6+3K1"),
}

_forbidden = {"P4Tidy": ("3K2bar", "3sun", "C5"), "TreeCograph": ("3K2bar", "P6+3K1")}


def _assert_witness(graph: Graph, witness: Witness | None) -> Witness:
    assert witness is not None
    assert len(set(witness.vertices)) == len(witness.vertices)
    sub, _ = induced(graph, witness.vertices)
    assert nx.is_isomorphic(to_networkx(sub), to_networkx(_patterns[witness.pattern]))
    return witness


class TestP4Tidy:
    def test_c5(self, c5: Graph) -> None:
        result = recognize(c5)
        assert result.class_tag == "P4Tidy"
        witness = _assert_witness(c5, result.verdict.witness)
        assert not result.verdict.perfect
        assert (witness.rule, witness.node, witness.pattern) == ("a", 0, "C5")
        assert witness.vertices == (0, 1, 2, 3, 4)

    def test_3k2bar(self, three_k2_bar: Graph) -> None:
        result = recognize(three_k2_bar)
        assert result.class_tag == "P4Tidy"
        witness = _assert_witness(three_k2_bar, result.verdict.witness)
        assert (witness.rule, witness.node, witness.pattern) == ("c", 0, "3K2bar")
        assert sorted(witness.vertices) == [0, 1, 2, 3, 4, 5]

    @pytest.mark.parametrize("t", (3, 4, 5))
    def test_urchin(self, t: int) -> None:
        graph = spider(t, urchin=True)
        witness = _assert_witness(graph, recognize(graph).verdict.witness)
        assert (witness.rule, witness.pattern) == ("a", "3sun")

    def test_head_with_c5(self) -> None:
        graph = spider(4, head=cycle(5))
        witness = _assert_witness(graph, recognize(graph).verdict.witness)
        assert witness.pattern == "C5"
        assert sorted(witness.vertices) == [8, 9, 10, 11, 12]

    def test_fat_body_with_c4_head(self) -> None:
        graph = fatten(spider(3, head=cycle(4)), 3, "2K1")
        witness = _assert_witness(graph, recognize(graph).verdict.witness)
        assert (witness.rule, witness.pattern) == ("b", "3K2bar")

    def test_fat_body_with_clique_head(self) -> None:
        graph = fatten(spider(3, head=complete(2)), 3, "2K1")
        assert recognize(graph).verdict.perfect

    def test_join_with_c4(self) -> None:
        graph = join_all([complement(path(5)), edgeless(2)])
        result = recognize(graph)
        assert result.class_tag == "P4Tidy"
        witness = _assert_witness(graph, result.verdict.witness)
        assert (witness.rule, witness.pattern) == ("d", "3K2bar")

    @pytest.mark.parametrize(
        "graph",
        (
            spider(3),
            spider(5, head=complete(3)),
            spider(2, urchin=True),
            path(5),
            complement(path(5)),
            cycle(4),
            join_all([cycle(4), complete(3)]),
        ),
    )
    def test_perfect(self, graph: Graph) -> None:
        result = recognize(graph)
        assert result.class_tag == "P4Tidy"
        assert result.verdict.perfect
        assert result.verdict.witness is None

    def test_c4_flags(self) -> None:
        tree = decompose(join_all([cycle(4), complete(1)]))
        flags = c4_flags(tree)
        assert flags.c[tree.root]
        assert flags.p is None
        assert not any(flags.c[node.id] for node in tree.nodes if node.is_leaf)

    def test_p4tidy_recognizer_rejects_other_graphs(self) -> None:
        with pytest.raises(UnsupportedClassError):
            recognize_p4tidy(decompose(path(6)))


class TestTreeCograph:
    def test_p6_join_triple(self) -> None:
        graph = named("P6+3K1")
        result = recognize(graph)
        assert result.class_tag == "TreeCograph"
        witness = _assert_witness(graph, result.verdict.witness)
        assert (witness.rule, witness.pattern) == ("c", "P6+3K1")

    def test_cotree_with_induced_matching(self) -> None:
        graph = complement(path(8))
        result = recognize(graph)
        assert result.class_tag == "TreeCograph"
        witness = _assert_witness(graph, result.verdict.witness)
        assert (witness.rule, witness.pattern) == ("d", "3K2bar")

    def test_join_with_cotree_c4(self) -> None:
        graph = join_all([complement(path(6)), edgeless(2)])
        result = recognize(graph)
        assert result.class_tag == "TreeCograph"
        witness = _assert_witness(graph, result.verdict.witness)
        assert (witness.rule, witness.pattern) == ("b", "3K2bar")

    def test_p6_join_pair_is_perfect(self) -> None:
        assert recognize(join_all([path(6), edgeless(2)])).verdict.perfect

    @pytest.mark.parametrize("seed", range(5))
    def test_trees_are_perfect(self, seed: int) -> None:
        assert recognize(random_tree(25, seed)).verdict.perfect

    def test_tc_flags(self) -> None:
        tree = decompose(path(6))
        flags = tc_flags(tree)
        assert flags.p is not None
        assert flags.alpha is not None
        assert flags.p[tree.root]
        assert flags.alpha[tree.root] == 3
        assert not flags.c[tree.root]

    def test_treecograph_recognizer_rejects_other_graphs(self, c5: Graph) -> None:
        with pytest.raises(UnsupportedClassError):
            recognize_treecograph(decompose(c5))


class TestClassify:
    @pytest.mark.parametrize("graph", (named("C6+3K1"), named("petersen"), cycle(6)))
    def test_unsupported(self, graph: Graph) -> None:
        with pytest.raises(UnsupportedClassError):
            recognize(graph)

    def test_p4_tidy_is_preferred(self, p4: Graph) -> None:
        class_tag, classes = classify(decompose(p4))
        assert class_tag == "P4Tidy"
        assert list(classes) == [0]

    def test_precomputed_tree(self, c5: Graph) -> None:
        tree = decompose(c5)
        assert recognize(c5, tree).tree is tree

    def test_large_tree_is_classified_in_linear_time(self) -> None:
        # A comb: every spine vertex has one pendant leaf, so ends and body have equal size.
        k = 6000
        spine = ((i, i + 1) for i in range(k - 1))
        teeth = ((i, k + i) for i in range(k))
        tree = decompose(from_edge_list(2 * k, [*spine, *teeth]))

        start = time.perf_counter()
        class_tag, classes = classify(tree)
        elapsed = time.perf_counter() - start

        assert class_tag == "TreeCograph"
        assert classes[tree.root].tag == "TreeLike"
        assert elapsed < 1.0


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_verdict_matches_brute_force(graph: Graph) -> None:
    if not (is_p4_tidy_by_definition(graph) or is_tree_cograph_by_definition(graph)):
        return

    result = recognize(graph)
    assert result.verdict.perfect == brute_is_np(graph)
    if not result.verdict.perfect:
        _assert_witness(graph, result.verdict.witness)


@pytest.mark.parametrize("seed", range(8))
def test_random_families_match_brute_force(seed: int) -> None:
    for graph in (random_p4tidy(8, seed), random_treecograph(8, seed)):
        result = recognize(graph)
        assert result.verdict.perfect == brute_is_np(graph)


@pytest.mark.parametrize("family", (random_p4tidy, random_treecograph))
def test_random_class_instances_match_forbidden_subgraphs(family: Callable[[int, int], Graph]) -> None:
    for seed in range(500):
        graph = family(7 + seed % 4, seed)
        result = recognize(graph)
        obstructed = any(
            contains_induced(graph, _patterns[name]) is not None for name in _forbidden[result.class_tag]
        )
        assert result.verdict.perfect is not obstructed, (seed, list(graph.edges()))
        if obstructed:
            _assert_witness(graph, result.verdict.witness)
