from __future__ import annotations

from typing import Annotated

from pydantic import AfterValidator


def _ensure_edge(value: tuple[int, int]) -> tuple[int, int]:
    """
    Makes sure the given vertex pair is a valid edge and orders its endpoints.

    Raises:
        ValueError: If the pair is a loop or has a negative endpoint.
    """
    u, v = value
    if u < 0 or v < 0:
        raise ValueError("Negative vertex id.")
    if u == v:
        raise ValueError("Loop edge.")

    return (u, v) if u < v else (v, u)


Edge = Annotated[tuple[int, int], AfterValidator(_ensure_edge)]
"""
Pydantic vertex pair that accepts only loop-free pairs of non-negative ids and orders the endpoints.
"""
