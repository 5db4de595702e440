import pytest

from nbperfect.rule import Rule, RuleError, RuleSet, rule


class EvenNodes(RuleSet[str]):
    __slots__ = ("calls",)

    def __init__(self) -> None:
        self.calls: list[tuple[str, int]] = []

    @rule("a", "The node id is divisible by four.")
    def by_four(self, node_id: int) -> str | None:
        self.calls.append(("a", node_id))
        return f"a:{node_id}" if node_id % 4 == 0 else None

    @rule("b", "The node id is even.")
    def even(self, node_id: int) -> str | None:
        self.calls.append(("b", node_id))
        return f"b:{node_id}" if node_id % 2 == 0 else None

    def helper(self, node_id: int) -> str | None:
        return "never a rule"


class Failing(RuleSet[str]):
    __slots__ = ()

    @rule("x", "Always fails.")
    def broken(self, node_id: int) -> str | None:
        raise KeyError(node_id)


class TestRule:
    def test_attributes(self) -> None:
        item = EvenNodes.__dict__["by_four"]
        assert isinstance(item, Rule)
        assert item.rule_id == "a"
        assert item.description == "The node id is divisible by four."
        assert item.name == "EvenNodes.by_four"

    def test_bound_call(self) -> None:
        rules = EvenNodes()
        assert rules.by_four(8) == "a:8"
        assert rules.by_four(6) is None
        assert rules.calls == [("a", 8), ("a", 6)]

    def test_exception_is_wrapped(self) -> None:
        with pytest.raises(RuleError, match="Failing.broken at node 3") as exc_info:
            Failing().broken(3)

        assert isinstance(exc_info.value.__cause__, KeyError)

    def test_exception_passthrough(self) -> None:
        class RawRule(Rule[RuleSet[str], str]):
            __slots__ = ()

            exception = None

        def fail(owner: RuleSet[str], node_id: int) -> str | None:
            raise KeyError(node_id)

        class Passthrough(RuleSet[str]):
            __slots__ = ()

            broken = RawRule(fail, "y", "Always fails.")

        with pytest.raises(KeyError):
            Passthrough().broken(1)


class TestRuleSet:
    def test_rules_in_declaration_order(self) -> None:
        assert [item.rule_id for item in EvenNodes().rules()] == ["a", "b"]

    @pytest.mark.parametrize(
        ("node_ids", "expected"),
        (
            ([1, 3, 5], None),
            ([1, 6, 8], "b:6"),
            ([1, 8, 6], "a:8"),
            ([], None),
        ),
    )
    def test_first_match(self, *, node_ids: list[int], expected: str | None) -> None:
        assert EvenNodes().first_match(node_ids) == expected

    def test_first_match_stops_early(self) -> None:
        rules = EvenNodes()
        rules.first_match([1, 2, 3])
        assert rules.calls == [("a", 1), ("b", 1), ("a", 2), ("b", 2)]
