"""
Definitional certificate checks. None of them enumerates subsets, so they also run on large instances.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from itertools import combinations
from typing import TYPE_CHECKING

from .graph import Graph
from .typing import Element

if TYPE_CHECKING:
    from .optimal import OptimalLists

__all__ = (
    "ValidationError",
    "check_lists",
    "element_holders",
    "is_2_independent",
    "is_dominating",
    "is_independent",
    "is_matching",
    "is_neighborhood_covering",
    "is_neighborhood_independent",
    "is_total_dominating",
    "is_vertex_cover",
    "validate_lists",
)

logger = logging.getLogger(__name__)


class ValidationError(Exception):
    """Raised when a certificate is invalid."""


def _in_graph(graph: Graph, elements: Iterable[Element]) -> bool:
    for x in elements:
        ends = (x,) if isinstance(x, int) else x
        if not all(0 <= v < graph.n for v in ends):
            return False
        if not isinstance(x, int) and not graph.has_edge(*x):
            return False
    return True


def _distinct(elements: Sequence[Element]) -> bool:
    return len(set(elements)) == len(elements)


def element_holders(graph: Graph, element: Element) -> set[int]:
    """
    Returns the vertices `v` whose closed neighborhood contains the given vertex or edge.
    """
    if isinstance(element, int):
        return set(graph.closed_neighbor_set(element))

    u, v = element
    return set(graph.closed_neighbor_set(u) & graph.closed_neighbor_set(v))


def is_dominating(graph: Graph, vertices: Sequence[int]) -> bool:
    """
    Returns whether every vertex is in or adjacent to the given set.
    """
    if not _in_graph(graph, vertices):
        return False

    seen = [False] * graph.n
    for v in vertices:
        seen[v] = True
        for u in graph.neighbors(v):
            seen[u] = True
    return all(seen)


def is_total_dominating(graph: Graph, vertices: Sequence[int]) -> bool:
    """
    Returns whether every vertex is adjacent to a vertex of the given set.
    """
    if not _in_graph(graph, vertices):
        return False

    seen = [False] * graph.n
    for v in vertices:
        for u in graph.neighbors(v):
            seen[u] = True
    return all(seen)


def is_vertex_cover(graph: Graph, vertices: Sequence[int]) -> bool:
    if not _in_graph(graph, vertices):
        return False

    chosen = set(vertices)
    return all(u in chosen or v in chosen for u, v in graph.edges())


def is_independent(graph: Graph, vertices: Sequence[int]) -> bool:
    if not _in_graph(graph, vertices) or not _distinct(vertices):
        return False

    return not any(graph.has_edge(u, v) for u, v in combinations(vertices, 2))


def is_matching(graph: Graph, edges: Sequence[tuple[int, int]]) -> bool:
    if not _in_graph(graph, edges):
        return False

    ends = [v for e in edges for v in e]
    return len(set(ends)) == len(ends)


def is_2_independent(graph: Graph, vertices: Sequence[int]) -> bool:
    """
    Returns whether the given vertices are pairwise at distance at least 3, that is
    their closed neighborhoods are pairwise disjoint.
    """
    if not _in_graph(graph, vertices) or not _distinct(vertices):
        return False

    seen = [False] * graph.n
    for v in vertices:
        for u in graph.closed_neighbor_set(v):
            if seen[u]:
                return False
            seen[u] = True
    return True


def is_neighborhood_covering(graph: Graph, vertices: Sequence[int]) -> bool:
    """
    Returns whether every vertex and every edge of the graph lies in the closed neighborhood
    of some vertex of the given set.
    """
    if not _in_graph(graph, vertices):
        return False

    covered_vertex = [False] * graph.n
    covered_edges: set[tuple[int, int]] = set()
    for v in set(vertices):
        closed = graph.closed_neighbor_set(v)
        for u in closed:
            covered_vertex[u] = True
        # Edges inside N[v]: those at v, and those between two neighbors of v.
        for u in graph.neighbors(v):
            covered_edges.add((u, v) if u < v else (v, u))
            for w in graph.neighbors(u):
                if u < w and w in closed:
                    covered_edges.add((u, w))

    return all(covered_vertex) and len(covered_edges) == graph.m


def is_neighborhood_independent(graph: Graph, elements: Sequence[Element]) -> bool:
    """
    Returns whether no closed neighborhood contains two of the given vertices and edges.
    """
    if not _in_graph(graph, elements) or not _distinct(elements):
        return False

    holder = [False] * graph.n
    for x in elements:
        for v in element_holders(graph, x):
            if holder[v]:
                return False
            holder[v] = True
    return True


def check_lists(graph: Graph, lists: OptimalLists) -> list[str]:
    """
    Checks the four certificate lists of the graph.

    Returns:
        The description of every violated property, an empty list if the lists are valid.
    """
    problems: list[str] = []
    if not is_neighborhood_covering(graph, lists.rn):
        problems.append("R_n is not a neighborhood-covering set")
    if not is_neighborhood_independent(graph, lists.an):
        problems.append("A_n is not a neighborhood-independent set")
    if not is_2_independent(graph, lists.a2):
        problems.append("A_2 is not a 2-independent set")
    if not is_dominating(graph, lists.d):
        problems.append("D is not a dominating set")
    if len(lists.a2) > len(lists.d):
        problems.append(f"|A_2| = {len(lists.a2)} exceeds |D| = {len(lists.d)}")
    if len(lists.an) > len(lists.rn):
        problems.append(f"|A_n| = {len(lists.an)} exceeds |R_n| = {len(lists.rn)}")
    if lists.pairings + len(lists.a2) > graph.n:
        problems.append(f"pairing count {lists.pairings} plus |A_2| exceeds n = {graph.n}")

    return problems


def validate_lists(graph: Graph, lists: OptimalLists) -> None:
    """
    Validates the four certificate lists of the graph.

    Raises:
        ValidationError: If any of the lists is invalid.
    """
    problems = check_lists(graph, lists)
    if problems:
        raise ValidationError("; ".join(problems))

    logger.debug("Certificate lists of graph (n=%d) are valid", graph.n)
