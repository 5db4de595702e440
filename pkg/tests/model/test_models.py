import pytest
from pydantic import TypeAdapter, ValidationError

from nbperfect.families import cycle, generate
from nbperfect.graph import GraphError
from nbperfect.model import (
    Edge,
    FamilySpec,
    FatSpec,
    GraphModel,
    RunReport,
    StarfishSpec,
    SunSpec,
    VerdictModel,
)

_edge_adapter: TypeAdapter[Edge] = TypeAdapter(Edge)
_family_adapter: TypeAdapter[FamilySpec] = TypeAdapter(FamilySpec)


class TestEdge:
    @pytest.mark.parametrize(("value", "expected"), (((0, 1), (0, 1)), ((4, 2), (2, 4)), ([3, 1], (1, 3))))
    def test_valid(self, *, value: tuple[int, int], expected: tuple[int, int]) -> None:
        assert _edge_adapter.validate_python(value) == expected

    @pytest.mark.parametrize("value", ((1, 1), (-1, 2), (0, 1, 2), "0-1"))
    def test_invalid(self, value: object) -> None:
        with pytest.raises(ValidationError):
            _edge_adapter.validate_python(value)


class TestGraphModel:
    def test_from_graph(self) -> None:
        model = GraphModel.from_graph(cycle(4))
        assert model.n == 4
        assert model.edges == [(0, 1), (0, 3), (1, 2), (2, 3)]
        assert model.to_graph() == cycle(4)

    def test_json(self) -> None:
        model = GraphModel.model_validate_json('{"n": 3, "edges": [[2, 1], [0, 1]]}')
        assert model.edges == [(1, 2), (0, 1)]
        assert model.to_graph().m == 2

    def test_out_of_range(self) -> None:
        with pytest.raises(GraphError):
            GraphModel(n=2, edges=[(0, 2)]).to_graph()

    def test_negative_size(self) -> None:
        with pytest.raises(ValidationError):
            GraphModel(n=-1, edges=[])


class TestFamilySpec:
    def test_nested_head(self) -> None:
        spec = _family_adapter.validate_python(
            {"family": "starfish", "t": 3, "head": {"family": "cycle", "k": 5}}
        )
        assert isinstance(spec, StarfishSpec)
        assert generate(spec).n == 11

    def test_fat(self) -> None:
        spec = _family_adapter.validate_json(
            '{"family": "fat", "base": {"family": "urchin", "t": 3}, '
            '"role": "body", "index": 1, "shape": "K2"}'
        )
        assert isinstance(spec, FatSpec)
        graph = generate(spec)
        assert graph.n == 7
        assert graph.has_edge(4, 6)

    @pytest.mark.parametrize(
        "data",
        (
            {"family": "sun", "k": 4},
            {"family": "cycle", "k": 2},
            {"family": "starfish", "t": 1},
            {"family": "path", "k": 3, "extra": 1},
            {"family": "random_tree", "n": 5},
            {"family": "named", "name": "K5"},
            {"family": "fat", "base": {"family": "path", "k": 3}, "role": "end", "shape": "K2"},
        ),
    )
    def test_invalid(self, data: dict[str, object]) -> None:
        with pytest.raises(ValidationError):
            _family_adapter.validate_python(data)

    def test_fat_leg_out_of_range(self) -> None:
        spec = FatSpec(base=StarfishSpec(t=3), role="end", index=3, shape="2K1")
        with pytest.raises(GraphError, match="out of range"):
            generate(spec)

    def test_frozen(self) -> None:
        spec = SunSpec(k=5)
        with pytest.raises(ValidationError):
            spec.k = 7  # type: ignore[misc]


class TestRunReport:
    def test_defaults(self) -> None:
        report = RunReport(input="cycle:5")
        assert report.params == report.certificates == report.timing == {}
        assert report.class_tag is None
        assert report.verdict is None

    def test_json(self) -> None:
        report = RunReport(
            input="cycle:5",
            class_tag="P4Tidy",
            verdict=VerdictModel(perfect=False, rule="a", node=0, witness=[0, 1, 2, 3, 4]),
            certificates={"A_n": [(1, 0), (3, 4)], "D": [0, 2]},
        )
        restored = RunReport.model_validate_json(report.model_dump_json())
        assert restored.certificates["A_n"] == [(0, 1), (3, 4)]
        assert restored.certificates["D"] == [0, 2]
        assert restored.verdict == report.verdict

    def test_unknown_class(self) -> None:
        with pytest.raises(ValidationError):
            RunReport(input="x", class_tag="Cograph")  # type: ignore[arg-type]
