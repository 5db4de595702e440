import pytest
from hypothesis import given, settings

from nbperfect.decomposition import decompose
from nbperfect.families import complete, cycle, edgeless, fatten, named, path, random_tree, spider
from nbperfect.graph import Graph, complement, from_edge_list
from nbperfect.oracle import is_p4_tidy_by_definition, is_tree_cograph_by_definition
from nbperfect.structure import (
    ClassificationError,
    NodeClass,
    classify_p4tidy_node,
    classify_treecograph_node,
    expanded_host_tree,
    is_p4_tidy,
    is_tree_cograph,
)

from .strategies import graphs


def _root_p4tidy(graph: Graph) -> NodeClass | None:
    tree = decompose(graph)
    return classify_p4tidy_node(tree, tree.root)


def _root_treecograph(graph: Graph) -> NodeClass | None:
    tree = decompose(graph)
    return classify_treecograph_node(tree, tree.root)


class TestP4TidyNodes:
    @pytest.mark.parametrize(
        ("graph", "tag"),
        (
            (cycle(5), "C5"),
            (path(5), "P5"),
            (complement(path(5)), "P5bar"),
        ),
    )
    def test_five_vertex_primes(self, *, graph: Graph, tag: str) -> None:
        cls = _root_p4tidy(graph)
        assert cls is not None
        assert cls.tag == tag
        assert sorted(cls.order) == [0, 1, 2, 3, 4]

    def test_path_order(self) -> None:
        cls = _root_p4tidy(path(5))
        assert cls is not None
        assert cls.order == (0, 1, 2, 3, 4)

    def test_starfish(self, starfish3: Graph) -> None:
        cls = _root_p4tidy(starfish3)
        assert cls is not None
        assert cls.tag == "Spider"
        spider_ = cls.spider
        assert spider_ is not None
        assert (spider_.kind, spider_.t, spider_.head, spider_.fat) == ("starfish", 3, None, None)
        assert spider_.ends == (0, 1, 2)
        assert spider_.body == (3, 4, 5)

    def test_urchin_with_head(self) -> None:
        cls = _root_p4tidy(spider(4, urchin=True, head=cycle(5)))
        assert cls is not None
        assert cls.spider is not None
        assert cls.spider.kind == "urchin"
        assert cls.spider.t == 4
        assert cls.spider.head == 8
        assert cls.spider.ends == (0, 1, 2, 3)

    @pytest.mark.parametrize(("vertex", "shape"), ((0, "K2"), (0, "2K1"), (4, "K2"), (4, "2K1")))
    def test_fat_starfish(self, *, vertex: int, shape: str) -> None:
        cls = _root_p4tidy(fatten(spider(3), vertex, shape))
        assert cls is not None
        assert cls.spider is not None
        assert cls.spider.fat == (vertex, shape)

    def test_two_fat_vertices_are_rejected(self) -> None:
        graph = fatten(fatten(spider(3), 0, "K2"), 1, "K2")
        assert _root_p4tidy(graph) is None

    def test_fat_five_vertex_prime_is_rejected(self) -> None:
        assert _root_p4tidy(fatten(cycle(5), 0, "2K1")) is None

    @pytest.mark.parametrize("graph", (cycle(6), path(6), named("petersen")))
    def test_rejected(self, graph: Graph) -> None:
        assert _root_p4tidy(graph) is None

    def test_not_a_prime_node(self) -> None:
        tree = decompose(cycle(4))
        with pytest.raises(ClassificationError):
            classify_p4tidy_node(tree, tree.root)


class TestTreeCographNodes:
    def test_tree_like(self, forked_path: Graph) -> None:
        cls = _root_treecograph(forked_path)
        assert cls is not None
        assert cls.tag == "TreeLike"

    def test_self_complementary_prime_is_tree_like(self, p4: Graph) -> None:
        cls = _root_treecograph(p4)
        assert cls is not None
        assert cls.tag == "TreeLike"

    def test_cotree_like(self) -> None:
        cls = _root_treecograph(complement(path(6)))
        assert cls is not None
        assert cls.tag == "CoTreeLike"

    def test_cotree_like_with_twins(self, forked_path: Graph) -> None:
        cls = _root_treecograph(complement(forked_path))
        assert cls is not None
        assert cls.tag == "CoTreeLike"

    @pytest.mark.parametrize("graph", (cycle(5), cycle(6), named("petersen")))
    def test_rejected(self, graph: Graph) -> None:
        assert _root_treecograph(graph) is None

    def test_twins_that_are_not_leaves(self) -> None:
        # Vertices 2 and 5 are nonadjacent twins of degree 2.
        graph = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 3)])
        assert _root_treecograph(graph) is None

    def test_expanded_host_tree(self, forked_path: Graph) -> None:
        tree = decompose(forked_path)
        host, labels = expanded_host_tree(tree, tree.root, "TreeLike")
        assert labels == (0, 1, 2, 3, 4)
        assert host == forked_path

    def test_expanded_host_cotree(self, forked_path: Graph) -> None:
        graph = complement(forked_path)
        tree = decompose(graph)
        host, labels = expanded_host_tree(tree, tree.root, "CoTreeLike")
        assert labels == (0, 1, 2, 3, 4)
        assert host == forked_path


class TestMembership:
    def test_starfish_is_p4_tidy(self) -> None:
        assert is_p4_tidy(decompose(spider(4)))

    @pytest.mark.parametrize("graph", (cycle(6), path(6), named("petersen")))
    def test_not_p4_tidy(self, graph: Graph) -> None:
        assert not is_p4_tidy(decompose(graph))

    @pytest.mark.parametrize("graph", (complete(4), edgeless(3), named("3K2bar"), cycle(4)))
    def test_cographs_are_p4_tidy(self, graph: Graph) -> None:
        assert is_p4_tidy(decompose(graph))

    @pytest.mark.parametrize("seed", range(5))
    def test_trees_are_tree_cographs(self, seed: int) -> None:
        assert is_tree_cograph(decompose(random_tree(15, seed)))

    def test_3k2bar_is_a_tree_cograph(self, three_k2_bar: Graph) -> None:
        assert is_tree_cograph(decompose(three_k2_bar))

    @pytest.mark.parametrize("graph", (cycle(5), named("C6+3K1"), named("petersen")))
    def test_not_tree_cographs(self, graph: Graph) -> None:
        assert not is_tree_cograph(decompose(graph))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7))
def test_p4_tidy_membership_matches_definition(graph: Graph) -> None:
    assert is_p4_tidy(decompose(graph)) == is_p4_tidy_by_definition(graph)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7))
def test_tree_cograph_membership_matches_definition(graph: Graph) -> None:
    assert is_tree_cograph(decompose(graph)) == is_tree_cograph_by_definition(graph)
