from __future__ import annotations

from pydantic import BaseModel, Field

from ..typing import ClassTag
from .edge import Edge


class VerdictModel(BaseModel):
    """
    Neighborhood-perfectness verdict with the witness of a negative answer.
    """

    perfect: bool
    rule: str | None = None
    node: int | None = None
    description: str | None = None
    witness: list[int] | None = None


class RunReport(BaseModel):
    """
    Structured result of a command-line run.
    """

    input: str
    """The input path or family specification."""

    class_tag: ClassTag | None = None
    """The recognized graph class."""

    verdict: VerdictModel | None = None
    """The neighborhood-perfectness verdict."""

    params: dict[str, int] = Field(default_factory=dict)
    """Parameter values by parameter name."""

    certificates: dict[str, list[int | Edge]] = Field(default_factory=dict)
    """Certificate lists by list name (`A_n`, `R_n`, `A_2`, `D`)."""

    timing: dict[str, int] = Field(default_factory=dict)
    """Wall clock time of each phase in microseconds."""
