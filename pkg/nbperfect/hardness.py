"""
Co-bipartite reductions showing that the neighborhood parameters are hard on general graphs.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, format_text, from_edge_list

__all__ = (
    "CoBipartite",
    "ReductionError",
    "reduce_alpha_to_an",
    "reduce_vc_to_pn",
)

logger = logging.getLogger(__name__)


class ReductionError(Exception):
    """Raised when a reduction is not applicable to its input."""


@dataclass(frozen=True, kw_only=True, slots=True)
class CoBipartite:
    """
    Co-bipartite graph: its vertex set is covered by the cliques `x` and `y`.
    """

    graph: Graph
    x: tuple[int, ...]
    y: tuple[int, ...]
    source: Graph
    """The graph the instance was reduced from."""

    kind: str
    """The name of the reduction."""

    def is_valid(self) -> bool:
        """
        Returns whether `x` and `y` partition the vertices into two cliques.
        """
        if sorted((*self.x, *self.y)) != list(self.graph.vertices()):
            return False

        return all(_is_clique(self.graph, part) for part in (self.x, self.y))

    def to_text(self) -> str:
        """
        Formats the instance in the graph text format with comment lines recording the source.
        """
        source = " ".join(f"{u}-{v}" for u, v in self.source.edges())
        comments = (
            f"source {self.kind} n={self.source.n} edges: {source}",
            f"cliques {len(self.x)}+{len(self.y)}",
        )
        return format_text(self.graph, comments)


def _is_clique(graph: Graph, vertices: tuple[int, ...]) -> bool:
    return all(graph.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1 :])


def _clique_edges(vertices: range) -> Iterable[tuple[int, int]]:
    return ((u, v) for u in vertices for v in vertices if u < v)


def reduce_alpha_to_an(source: Graph) -> CoBipartite:
    """
    Reduces maximum independent set to maximum neighborhood-independent set.

    The result has a clique `x` with a copy `v'` of every vertex `v` of the source, and a clique `y`
    with every vertex and every edge of the source. `v'` is adjacent to `v` and to the edges at `v`.
    The neighborhood independence number of the result equals the independence number of the source.

    Layout: copies `0..n-1`, source vertices `n..2n-1`, then source edges in lexicographic order.
    """
    n = source.n
    edges = list(source.edges())
    x = range(n)
    y = range(n, 2 * n + len(edges))
    result: list[tuple[int, int]] = [*_clique_edges(x), *_clique_edges(y)]
    result.extend((v, n + v) for v in source.vertices())
    for i, (a, b) in enumerate(edges):
        result.extend(((a, 2 * n + i), (b, 2 * n + i)))

    graph = from_edge_list(2 * n + len(edges), result)
    logger.debug("Reduced independent set instance (n=%d) to %d vertices", n, graph.n)
    return CoBipartite(graph=graph, x=tuple(x), y=tuple(y), source=source, kind="alpha-to-an")


def reduce_vc_to_pn(source: Graph) -> CoBipartite:
    """
    Reduces minimum vertex cover to minimum neighborhood-covering set.

    The result has a clique `x` of the source vertices and a clique `y` of the source edges, every
    vertex being adjacent to its incident edges. With `tau` the vertex cover number of the source,
    the neighborhood covering number of the result is `tau` or `tau + 1`.

    Layout: source vertices `0..n-1`, then source edges in lexicographic order.

    Raises:
        ReductionError: If the source has no edges.
    """
    if source.m == 0:
        raise ReductionError("The vertex cover reduction needs a graph with at least one edge.")

    n = source.n
    edges = list(source.edges())
    x = range(n)
    y = range(n, n + len(edges))
    result: list[tuple[int, int]] = [*_clique_edges(x), *_clique_edges(y)]
    for i, (a, b) in enumerate(edges):
        result.extend(((a, n + i), (b, n + i)))

    graph = from_edge_list(n + len(edges), result)
    logger.debug("Reduced vertex cover instance (n=%d) to %d vertices", n, graph.n)
    return CoBipartite(graph=graph, x=tuple(x), y=tuple(y), source=source, kind="vc-to-pn")
