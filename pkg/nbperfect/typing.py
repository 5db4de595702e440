from __future__ import annotations

from typing import ClassVar, Literal, TypedDict, Union

__all__ = (
    "BenchConfig",
    "BenchFamily",
    "ClassTag",
    "EdgeTuple",
    "Element",
    "GraphFormat",
    "NodeKind",
    "OracleConfig",
    "ParamKind",
    "PredicateKind",
    "SweepConfig",
    "oracle_limit",
)

# -- Typing

EdgeTuple = tuple[int, int]
"""
Edge as a `(u, v)` tuple with `u < v`.
"""

Element = Union[int, EdgeTuple]
"""
Element of a mixed vertex and edge collection.
"""

NodeKind = Literal["leaf", "P", "S", "N"]
"""
Modular decomposition node kinds: leaf, parallel, series and neighborhood (prime) nodes.
"""

ParamKind = Literal["pn", "an", "a2", "gamma", "gamma_t", "tau", "nu", "alpha"]
"""
Graph parameters the brute force oracle can compute.
"""

ClassTag = Literal["P4Tidy", "TreeCograph"]
"""
Supported graph classes.
"""

GraphFormat = Literal["edge", "json"]
"""
Supported graph serialization formats.
"""

PredicateKind = Literal["is_np", "is_mnnp", "is_strongly_np"]
"""
Hereditary predicates the brute force oracle can decide.
"""


class OracleConfig(TypedDict, total=False):
    """
    Oracle size guards: the maximum vertex count each computation accepts.

    Keys that are not set fall back to `_default_oracle_config`.
    """

    pn: int
    an: int
    a2: int
    gamma: int
    gamma_t: int
    tau: int
    nu: int
    alpha: int
    is_np: int
    is_mnnp: int
    is_strongly_np: int


class _default_oracle_config:
    """Default oracle size guards."""

    pn: ClassVar[int] = 12
    an: ClassVar[int] = 10
    a2: ClassVar[int] = 16
    gamma: ClassVar[int] = 14
    gamma_t: ClassVar[int] = 12
    tau: ClassVar[int] = 16
    nu: ClassVar[int] = 1000
    alpha: ClassVar[int] = 40
    is_np: ClassVar[int] = 9
    is_mnnp: ClassVar[int] = 9
    is_strongly_np: ClassVar[int] = 9


def oracle_limit(kind: ParamKind | PredicateKind, config: OracleConfig | None = None) -> int:
    """
    Returns the size guard for the given oracle computation.

    Arguments:
        kind: The parameter or predicate.
        config: Optional overrides.
    """
    if config is not None and kind in config:
        return config[kind]  # type: ignore[literal-required]

    return int(getattr(_default_oracle_config, kind))


class SweepConfig(TypedDict, total=False):
    """
    Oracle-equivalence sweep configuration.
    """

    check_lists: bool
    """Whether to compare certificate list lengths with the oracle (besides the verdict)."""

    check_flags: bool
    """Whether to compare per-node recognition flags with the oracle."""


class _default_sweep_config:
    """Default sweep configuration."""

    check_lists: ClassVar[bool] = True
    """See `SweepConfig.check_lists` for details."""

    check_flags: ClassVar[bool] = True
    """See `SweepConfig.check_flags` for details."""


BenchFamily = Literal["random_tree", "random_p4tidy", "random_treecograph"]
"""
Random families the benchmark can run on.
"""


class BenchConfig(TypedDict, total=False):
    """
    Benchmark configuration: instance sizes double `steps` times starting from `start`.
    """

    start: int
    steps: int
    seed: int
    family: BenchFamily
    dense_limit: int


class _default_bench_config:
    """Default benchmark configuration."""

    start: ClassVar[int] = 1000
    steps: ClassVar[int] = 5
    seed: ClassVar[int] = 0
    family: ClassVar[BenchFamily] = "random_treecograph"
    dense_limit: ClassVar[int] = 16
