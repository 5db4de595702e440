import networkx as nx
import pytest
from pydantic import ValidationError

from nbperfect.families import (
    fatten,
    generate,
    named,
    parse_family,
    random_p4tidy,
    random_tree,
    random_treecograph,
    spider,
    sun,
)
from nbperfect.graph import GraphError, complement, components, to_networkx
from nbperfect.model import FatSpec, NamedSpec, RandomTreeSpec, StarfishSpec, SunSpec, UrchinSpec
from nbperfect.oracle import is_p4_tidy_by_definition, is_tree_cograph_by_definition


def test_sun() -> None:
    graph = sun(3)
    assert graph.n == 6
    assert [graph.degree(v) for v in range(3, 6)] == [2, 2, 2]
    assert all(graph.has_edge(u, v) for u, v in ((0, 1), (1, 2), (0, 2)))


def test_cycle_centered_sun() -> None:
    graph = sun(5, center="cycle")
    assert graph.n == 10
    assert not graph.has_edge(0, 2)


def test_urchin_is_complement_of_starfish() -> None:
    urchin, starfish = spider(3, urchin=True), spider(3)
    assert nx.is_isomorphic(to_networkx(urchin), to_networkx(complement(starfish)))


def test_starfish_with_head() -> None:
    graph = spider(3, head=named("P5bar"))
    assert graph.n == 11
    assert all(graph.has_edge(c, h) for c in range(3, 6) for h in range(6, 11))
    assert not any(graph.has_edge(s, h) for s in range(3) for h in range(6, 11))


@pytest.mark.parametrize(("shape", "twin_edge"), (("K2", True), ("2K1", False)))
def test_fatten(*, shape: str, twin_edge: bool) -> None:
    graph = fatten(spider(3), 3, shape)
    assert graph.n == 7
    assert graph.has_edge(3, 6) is twin_edge
    assert graph.neighbor_set(6) - {3} == graph.neighbor_set(3) - {6}


@pytest.mark.parametrize(
    ("name", "n", "m"),
    (
        ("3K2bar", 6, 12),
        ("C6+3K1", 9, 6 + 18),
        ("P6+3K1", 9, 5 + 18),
        ("3sun", 6, 9),
        ("P5bar", 5, 6),
        ("petersen", 10, 15),
    ),
)
def test_named(*, name: str, n: int, m: int) -> None:
    graph = generate(NamedSpec(name=name))  # type: ignore[arg-type]
    assert (graph.n, graph.m) == (n, m)


@pytest.mark.parametrize("seed", range(5))
def test_random_tree(seed: int) -> None:
    graph = random_tree(20, seed)
    assert graph.m == 19
    assert len(components(graph)) == 1
    assert graph == random_tree(20, seed)


@pytest.mark.parametrize("seed", range(10))
def test_random_p4tidy(seed: int) -> None:
    graph = random_p4tidy(9, seed)
    assert graph.n == 9
    assert is_p4_tidy_by_definition(graph)
    assert graph == random_p4tidy(9, seed)


@pytest.mark.parametrize("seed", range(10))
def test_random_treecograph(seed: int) -> None:
    graph = random_treecograph(10, seed)
    assert graph.n == 10
    assert is_tree_cograph_by_definition(graph)


def test_generate_fat_spider() -> None:
    spec = FatSpec(base=StarfishSpec(t=3), role="body", index=1, shape="2K1")
    graph = generate(spec)
    assert graph.n == 7
    assert graph.neighbor_set(6) == graph.neighbor_set(4)


def test_generate_fat_spider_invalid_index() -> None:
    with pytest.raises(GraphError, match="out of range"):
        generate(FatSpec(base=UrchinSpec(t=3), role="end", index=3, shape="K2"))


class TestParseFamily:
    @pytest.mark.parametrize(
        ("text", "expected"),
        (
            ("starfish:4", StarfishSpec(t=4)),
            ("sun:5", SunSpec(k=5)),
            ("named:3K2bar", NamedSpec(name="3K2bar")),
            ('{"family": "urchin", "t": 3, "head": {"family": "cycle", "k": 5}}', None),
        ),
    )
    def test_valid(self, *, text: str, expected: object) -> None:
        spec = parse_family(text)
        if expected is not None:
            assert spec == expected
        else:
            assert isinstance(spec, UrchinSpec)
            assert generate(spec).n == 11

    def test_random_family_seed(self) -> None:
        assert parse_family("random_tree:30", seed=7) == RandomTreeSpec(n=30, seed=7)

    @pytest.mark.parametrize(
        ("text",),
        (
            ("sun:4",),
            ("starfish:1",),
            ("cycle:2",),
            ("random_tree:10",),
            ("unknown:3",),
            ('{"family": "path", "k": 3, "extra": 1}',),
        ),
    )
    def test_invalid(self, *, text: str) -> None:
        with pytest.raises(ValidationError):
            parse_family(text)


def test_generated_graphs_are_isomorphic_to_their_definition() -> None:
    expected = nx.complement(nx.disjoint_union_all([nx.complete_graph(2)] * 3))
    assert nx.is_isomorphic(to_networkx(named("3K2bar")), expected)
