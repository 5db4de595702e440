from __future__ import annotations

from collections.abc import Callable, Generator, Iterable
from functools import partial
from typing import Generic, TypeVar

__all__ = (
    "Rule",
    "RuleError",
    "RuleSet",
    "rule",
)


class RuleError(Exception):
    """Raised when a recognition rule fails unexpectedly."""


TOwner = TypeVar("TOwner")
TResult = TypeVar("TResult")


class Rule(Generic[TOwner, TResult]):
    """
    Recognition rule method wrapper that also acts as a bound instance method when it
    replaces an instance method of a class.

    Rule methods receive a decomposition node id and return a result (typically a witness)
    if the rule fires at the node, `None` otherwise.

    Note: the wrapped method will be unbound.

    Configuration:
        exception: An optional exception factory (or type) that accepts a single string
                   argument and returns an exception. If not `None`, then exceptions
                   raised by the wrapped method will be caught and replaced by the exception
                   this method produces.
    """

    __slots__ = ("_description", "_rule_id", "_wrapped")

    exception: Callable[[str], Exception] | None = RuleError

    def __init__(
        self,
        wrapped: Callable[[TOwner, int], TResult | None],
        rule_id: str,
        description: str,
    ) -> None:
        """
        Initialization.

        Arguments:
            wrapped: The wrapped method.
            rule_id: The identifier of the rule.
            description: Human-readable description of the condition the rule checks.
        """
        self._wrapped = wrapped
        self._rule_id = rule_id
        self._description = description

    @property
    def rule_id(self) -> str:
        """
        The identifier of the rule.
        """
        return self._rule_id

    @property
    def description(self) -> str:
        """
        Human-readable description of the rule.
        """
        return self._description

    @property
    def name(self) -> str:
        """
        The (qualified) name of the wrapped method.
        """
        return self._wrapped.__qualname__

    def __get__(
        self, owner: TOwner, obj_type: type[TOwner] | None = None
    ) -> Callable[[int], TResult | None]:
        """
        Descriptor implementation that makes the wrapper work as a bound method of its owner.
        """
        return partial(self, owner)

    def __call__(self, owner: TOwner, node_id: int) -> TResult | None:
        """
        Executes the wrapped *unbound* method with the given `owner`.

        Exceptions raised by the wrapped method will be transformed by the `exception` attribute.

        Arguments:
            owner: The owner instance of the wrapper (the `self` argument of the wrapped instance method).
            node_id: The decomposition node to check.
        """
        try:
            return self._wrapped(owner, node_id)
        except Exception as e:
            if self.exception is None:
                raise
            raise self.exception(f"Rule failed: {self.name} at node {node_id}") from e


def rule(
    rule_id: str, description: str
) -> Callable[[Callable[[TOwner, int], TResult | None]], Rule[TOwner, TResult]]:
    """
    Method decorator factory that converts the decorated method into a `Rule` instance.

    Example:

    ```python
    class Rules(RuleSet[Witness]):
        @rule("a", "The quotient is C5.")
        def c5(self, node_id: int) -> Witness | None:
            ...
    ```

    Arguments:
        rule_id: The identifier of the rule.
        description: Human-readable description of the rule.
    """

    def decorator(func: Callable[[TOwner, int], TResult | None], /) -> Rule[TOwner, TResult]:
        return Rule(wrapped=func, rule_id=rule_id, description=description)

    return decorator


class RuleSet(Generic[TResult]):
    """
    Base class for rule collections. Subclasses declare their rules with the `rule()` decorator.
    """

    __slots__ = ()

    def rules(self) -> Generator[Rule[RuleSet[TResult], TResult], None, None]:
        """
        Generator that yields the rules that are registered on this class
        in the order they are present in `__class__.__dict__`.
        """
        for item in self.__class__.__dict__.values():
            if isinstance(item, Rule):
                yield item

    def first_match(self, node_ids: Iterable[int]) -> TResult | None:
        """
        Applies every rule to every node (in the given node order) and returns the first result.
        """
        rules = list(self.rules())
        for node_id in node_ids:
            for item in rules:
                result = item(self, node_id)
                if result is not None:
                    return result

        return None
