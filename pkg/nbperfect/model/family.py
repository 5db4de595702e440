from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, field_validator


class _FamilyBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class PathSpec(_FamilyBase):
    """Path on `k` vertices."""

    family: Literal["path"] = "path"
    k: PositiveInt


class CycleSpec(_FamilyBase):
    """Cycle on `k` vertices."""

    family: Literal["cycle"] = "cycle"
    k: Annotated[int, Field(ge=3)]


class CompleteSpec(_FamilyBase):
    """Complete graph on `k` vertices."""

    family: Literal["complete"] = "complete"
    k: PositiveInt


class EdgelessSpec(_FamilyBase):
    """Edgeless graph on `k` vertices."""

    family: Literal["edgeless"] = "edgeless"
    k: PositiveInt


class SunSpec(_FamilyBase):
    """
    Odd `k`-sun: inner vertices `0..k-1`, outer vertex `k + i` adjacent to inner `i` and `i + 1`.

    The inner vertices form a clique by default, or a cycle if `center` is `"cycle"`.
    """

    family: Literal["sun"] = "sun"
    k: Annotated[int, Field(ge=3)]
    center: Literal["clique", "cycle"] = "clique"

    @field_validator("k")
    @classmethod
    def _odd(cls, value: int) -> int:
        if value % 2 == 0:
            raise ValueError("Suns must have an odd number of inner vertices.")
        return value


class StarfishSpec(_FamilyBase):
    """
    Starfish with `t` legs: ends `0..t-1`, body `t..2t-1` (end `i` is adjacent to body `t + i`),
    then the vertices of the optional head graph, which is joined to the body.
    """

    family: Literal["starfish"] = "starfish"
    t: Annotated[int, Field(ge=2)]
    head: FamilySpec | None = None


class UrchinSpec(_FamilyBase):
    """
    Urchin with `t` legs: ends `0..t-1`, body `t..2t-1` (end `i` is adjacent to every body vertex
    except `t + i`), then the vertices of the optional head graph, which is joined to the body.
    """

    family: Literal["urchin"] = "urchin"
    t: Annotated[int, Field(ge=2)]
    head: FamilySpec | None = None


class FatSpec(_FamilyBase):
    """
    Fat spider: the end or body vertex of leg `index` of `base` is replaced by `K2` or `2K1`.

    The replaced vertex keeps its id, its twin is appended as the last vertex.
    """

    family: Literal["fat"] = "fat"
    base: Union[StarfishSpec, UrchinSpec] = Field(discriminator="family")
    role: Literal["end", "body"]
    index: NonNegativeInt = 0
    shape: Literal["K2", "2K1"]


NamedGraph = Literal["3K2bar", "C6+3K1", "P6+3K1", "3sun", "P5bar", "petersen"]


class NamedSpec(_FamilyBase):
    """Named graph."""

    family: Literal["named"] = "named"
    name: NamedGraph


class RandomTreeSpec(_FamilyBase):
    """Uniformly attached random tree on `n` vertices with random labels."""

    family: Literal["random_tree"] = "random_tree"
    n: PositiveInt
    seed: NonNegativeInt


class RandomP4TidySpec(_FamilyBase):
    """
    Random P4-tidy graph on `n` vertices, built over a random decomposition shape.

    Only modules with at most `dense_limit` vertices are joined to each other.
    """

    family: Literal["random_p4tidy"] = "random_p4tidy"
    n: PositiveInt
    seed: NonNegativeInt
    dense_limit: Annotated[int, Field(ge=2)] = 16


class RandomTreeCographSpec(_FamilyBase):
    """
    Random tree-cograph on `n` vertices, built from random trees, co-trees, unions and joins.

    Only modules with at most `dense_limit` vertices are joined or complemented.
    """

    family: Literal["random_treecograph"] = "random_treecograph"
    n: PositiveInt
    seed: NonNegativeInt
    dense_limit: Annotated[int, Field(ge=2)] = 16


FamilySpec = Annotated[
    Union[
        PathSpec,
        CycleSpec,
        CompleteSpec,
        EdgelessSpec,
        SunSpec,
        StarfishSpec,
        UrchinSpec,
        FatSpec,
        NamedSpec,
        RandomTreeSpec,
        RandomP4TidySpec,
        RandomTreeCographSpec,
    ],
    Field(discriminator="family"),
]
"""
Graph family specification, discriminated by the `family` field.
"""

StarfishSpec.model_rebuild()
UrchinSpec.model_rebuild()
FatSpec.model_rebuild()
