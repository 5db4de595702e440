"""
Exponential ground truth for every parameter and predicate of the package.

Vertex sets are bitmasks. Minimization problems are solved by trying candidate sets of increasing
size, maximization problems are reduced to maximum cliques in a compatibility graph and solved
with `networkx`. Every computation refuses graphs above its size guard (see `OracleConfig`).
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Sequence
from itertools import combinations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .families import path
from .graph import Graph, complement, components, induced, to_networkx
from .typing import Element, OracleConfig, ParamKind, PredicateKind, oracle_limit

__all__ = (
    "SizeGuardError",
    "brute_is_an_a2_hereditary",
    "brute_is_mnnp",
    "brute_is_np",
    "brute_is_strongly_np",
    "brute_param",
    "contains_induced",
    "has_odd_sun",
    "is_module_brute",
    "is_p4_tidy_by_definition",
    "is_p6free_chordal",
    "is_strongly_np",
    "is_tree_cograph_by_definition",
)

logger = logging.getLogger(__name__)

_pattern_limit = 10


class SizeGuardError(Exception):
    """Raised when an oracle computation is requested for a graph above its size guard."""


def _guard(graph: Graph, kind: ParamKind | PredicateKind, config: OracleConfig | None) -> None:
    limit = oracle_limit(kind, config)
    if graph.n > limit:
        raise SizeGuardError(f"The {kind} oracle accepts at most {limit} vertices, got {graph.n}.")


class _Masks:
    """
    Bitmask view of a graph: closed neighborhoods, and the edges inside every closed neighborhood.
    """

    __slots__ = ("closed", "edge_masks", "edges", "n")

    def __init__(self, graph: Graph) -> None:
        self.n = graph.n
        self.closed = [sum(1 << u for u in graph.closed_neighbor_set(v)) for v in graph.vertices()]
        self.edges = list(graph.edges())
        self.edge_masks = [0] * graph.n
        for i, (a, b) in enumerate(self.edges):
            for v in _bits(self.closed[a] & self.closed[b]):
                self.edge_masks[v] |= 1 << i

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def all_edges(self) -> int:
        return (1 << len(self.edges)) - 1


def _bits(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _smallest(n: int, accept: Callable[[tuple[int, ...]], bool]) -> tuple[int, ...] | None:
    """
    Returns the lexicographically first smallest vertex set the predicate accepts.
    """
    for k in range(n + 1):
        for chosen in combinations(range(n), k):
            if accept(chosen):
                return chosen
    return None


def _covers(masks: _Masks, chosen: Sequence[int]) -> bool:
    vertices = edges = 0
    for v in chosen:
        vertices |= masks.closed[v]
        edges |= masks.edge_masks[v]
    return vertices == masks.all_vertices and edges == masks.all_edges


def _has_cover(masks: _Masks, k: int) -> bool:
    return any(_covers(masks, chosen) for chosen in combinations(range(masks.n), k))


def _max_compatible(items: Sequence[int]) -> list[int]:
    """
    Returns a maximum set of indices whose masks are pairwise disjoint.
    """
    compatible = nx.Graph()
    compatible.add_nodes_from(range(len(items)))
    compatible.add_edges_from(
        (i, j) for i, j in combinations(range(len(items)), 2) if items[i] & items[j] == 0
    )
    clique, _ = nx.max_weight_clique(compatible, weight=None)
    return sorted(clique)


def _elements(masks: _Masks) -> tuple[list[Element], list[int]]:
    """
    Returns every vertex and edge together with the mask of the vertices whose closed
    neighborhood contains it.
    """
    elements: list[Element] = [*range(masks.n), *masks.edges]
    holders = [*masks.closed, *(masks.closed[a] & masks.closed[b] for a, b in masks.edges)]
    return elements, holders


def _neighborhood_independence(masks: _Masks) -> list[Element]:
    elements, holders = _elements(masks)
    return [elements[i] for i in _max_compatible(holders)]


def brute_param(
    graph: Graph, kind: ParamKind, config: OracleConfig | None = None
) -> tuple[int, tuple[Element, ...]]:
    """
    Computes a graph parameter exactly.

    Arguments:
        graph: The graph.
        kind: The parameter to compute.
        config: Optional size guard overrides.

    Returns:
        The value of the parameter and an optimal set that witnesses it.

    Raises:
        SizeGuardError: If the graph is above the size guard of the parameter.
        ValueError: If the parameter is undefined for the graph (total domination with an
            isolated vertex).
    """
    _guard(graph, kind, config)
    masks = _Masks(graph)
    n = graph.n
    result: Sequence[Element] | None

    if kind == "pn":
        result = _smallest(n, lambda chosen: _covers(masks, chosen))
    elif kind == "gamma":
        result = _smallest(n, lambda chosen: _union(masks.closed, chosen) == masks.all_vertices)
    elif kind == "gamma_t":
        if any(graph.degree(v) == 0 for v in graph.vertices()):
            raise ValueError("A graph with an isolated vertex has no total dominating set.")
        opened = [masks.closed[v] & ~(1 << v) for v in range(n)]
        result = _smallest(n, lambda chosen: _union(opened, chosen) == masks.all_vertices)
    elif kind == "tau":
        result = _smallest(n, lambda chosen: all(a in chosen or b in chosen for a, b in masks.edges))
    elif kind == "an":
        result = _neighborhood_independence(masks)
    elif kind == "a2":
        result = _max_compatible(masks.closed)
    elif kind == "alpha":
        clique, _ = nx.max_weight_clique(to_networkx(complement(graph)), weight=None)
        result = sorted(clique)
    else:
        matching = nx.max_weight_matching(to_networkx(graph), maxcardinality=True)
        result = sorted((min(e), max(e)) for e in matching)

    if result is None:
        raise RuntimeError(f"No {kind} set found.")

    logger.debug("Oracle %s of graph (n=%d, m=%d): %d", kind, graph.n, graph.m, len(result))
    return len(result), tuple(result)


def _union(masks: Sequence[int], chosen: Sequence[int]) -> int:
    result = 0
    for v in chosen:
        result |= masks[v]
    return result


def _is_balanced(graph: Graph) -> bool:
    """
    Returns whether the neighborhood covering and neighborhood independence numbers are equal.
    """
    masks = _Masks(graph)
    an = len(_neighborhood_independence(masks))
    return _has_cover(masks, an)


def _subgraphs(graph: Graph, *, proper: bool) -> Iterator[Graph]:
    """
    Yields the subgraph induced by every nonempty vertex subset.
    """
    full = (1 << graph.n) - 1
    for subset in range(1, full + (0 if proper else 1)):
        sub, _ = induced(graph, _bits(subset))
        yield sub


def brute_is_np(graph: Graph, config: OracleConfig | None = None) -> bool:
    """
    Decides whether the graph is neighborhood-perfect by checking every induced subgraph.

    Raises:
        SizeGuardError: If the graph is above the size guard.
    """
    _guard(graph, "is_np", config)
    return all(_is_balanced(sub) for sub in _subgraphs(graph, proper=False))


def brute_is_mnnp(graph: Graph, config: OracleConfig | None = None) -> bool:
    """
    Decides whether the graph is minimally non-neighborhood-perfect: it is not neighborhood-perfect
    but all of its proper induced subgraphs are.

    Raises:
        SizeGuardError: If the graph is above the size guard.
    """
    _guard(graph, "is_mnnp", config)
    if _is_balanced(graph):
        return False

    return all(_is_balanced(sub) for sub in _subgraphs(graph, proper=True))


def _hereditary(graph: Graph, equal: Callable[[_Masks], bool]) -> bool:
    return all(equal(_Masks(sub)) for sub in _subgraphs(graph, proper=False))


def _a2_equals_pn(masks: _Masks) -> bool:
    return _has_cover(masks, len(_max_compatible(masks.closed)))


def _a2_equals_an(masks: _Masks) -> bool:
    return len(_max_compatible(masks.closed)) == len(_neighborhood_independence(masks))


def brute_is_strongly_np(graph: Graph, config: OracleConfig | None = None) -> bool:
    """
    Decides whether the 2-independence number equals the neighborhood covering number in
    every induced subgraph.

    Raises:
        SizeGuardError: If the graph is above the size guard.
    """
    _guard(graph, "is_strongly_np", config)
    return _hereditary(graph, _a2_equals_pn)


def brute_is_an_a2_hereditary(graph: Graph, config: OracleConfig | None = None) -> bool:
    """
    Decides whether the 2-independence number equals the neighborhood independence number in
    every induced subgraph.

    Raises:
        SizeGuardError: If the graph is above the size guard.
    """
    _guard(graph, "is_strongly_np", config)
    return _hereditary(graph, _a2_equals_an)


def contains_induced(graph: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """
    Searches for an induced subgraph of `graph` that is isomorphic to `pattern`.

    Returns:
        The embedding (item `i` is the image of pattern vertex `i`), or `None` if there is none.

    Raises:
        SizeGuardError: If the pattern is too large.
    """
    if pattern.n > _pattern_limit:
        raise SizeGuardError(f"Patterns may have at most {_pattern_limit} vertices, got {pattern.n}.")
    if pattern.n > graph.n:
        return None

    matcher = GraphMatcher(to_networkx(graph), to_networkx(pattern))
    for mapping in matcher.subgraph_isomorphisms_iter():
        embedding = [0] * pattern.n
        for g, h in mapping.items():
            embedding[h] = g
        return tuple(embedding)

    return None


def _is_sun(graph: Graph) -> bool:
    """
    Returns whether the graph is a (not necessarily complete) sun.

    The outer vertices are exactly the vertices of degree 2. They must be independent, each
    adjacent to two adjacent inner vertices, and these inner pairs must form a Hamiltonian cycle
    of the inner vertices.
    """
    outer = [v for v in graph.vertices() if graph.degree(v) == 2]
    k = len(outer)
    if 2 * k != graph.n or k < 3:
        return False

    outer_set = set(outer)
    pairs: list[tuple[int, int]] = []
    for u in outer:
        a, b = graph.neighbors(u)
        if a in outer_set or b in outer_set or not graph.has_edge(a, b):
            return False
        pairs.append((a, b))

    inner = sorted(set(graph.vertices()) - outer_set)
    index = {v: i for i, v in enumerate(inner)}
    adj: list[list[int]] = [[] for _ in inner]
    for a, b in pairs:
        adj[index[a]].append(index[b])
        adj[index[b]].append(index[a])
    if any(len(nbrs) != 2 or nbrs[0] == nbrs[1] for nbrs in adj):
        return False

    cycle = Graph([sorted(nbrs) for nbrs in adj])
    return len(components(cycle)) == 1


def has_odd_sun(graph: Graph) -> bool:
    """
    Returns whether the graph contains an induced odd sun (`k`-sun with odd `k`, on `2k` vertices).
    """
    for k in range(3, graph.n // 2 + 1, 2):
        for chosen in combinations(graph.vertices(), 2 * k):
            sub, _ = induced(graph, chosen)
            if _is_sun(sub):
                return True
    return False


def is_p6free_chordal(graph: Graph) -> bool:
    return nx.is_chordal(to_networkx(graph)) and contains_induced(graph, path(6)) is None


def is_strongly_np(graph: Graph, config: OracleConfig | None = None) -> bool:
    """
    Decides strong neighborhood-perfectness by its characterization: the graph is chordal,
    `P6`-free and has no induced odd sun.

    Raises:
        SizeGuardError: If the graph is above the size guard.
    """
    _guard(graph, "is_strongly_np", config)
    return is_p6free_chordal(graph) and not has_odd_sun(graph)


def is_module_brute(graph: Graph, vertices: Sequence[int]) -> bool:
    """
    Returns whether every vertex outside the given set sees all or none of it.
    """
    inside = set(vertices)
    for v in graph.vertices():
        if v in inside:
            continue
        seen = sum(1 for u in inside if graph.has_edge(u, v))
        if 0 < seen < len(inside):
            return False
    return True


def _is_p4(graph: Graph, quad: Sequence[int]) -> bool:
    degrees = sorted(sum(1 for u in quad if u != v and graph.has_edge(u, v)) for v in quad)
    return degrees == [1, 1, 2, 2]


def is_p4_tidy_by_definition(graph: Graph) -> bool:
    """
    Checks that every induced `P4` has at most one partner: a vertex outside the `P4` that forms
    at least two induced `P4`s with its vertices.
    """
    for quad in combinations(graph.vertices(), 4):
        if not _is_p4(graph, quad):
            continue

        partners = 0
        for v in graph.vertices():
            if v in quad:
                continue
            five = (*quad, v)
            if sum(1 for q in combinations(five, 4) if _is_p4(graph, q)) >= 2:
                partners += 1
        if partners > 1:
            return False

    return True


def _is_tree(graph: Graph) -> bool:
    return graph.m == graph.n - 1 and len(components(graph)) == 1


def is_tree_cograph_by_definition(graph: Graph) -> bool:
    """
    Decides whether the graph is built from trees by complements and disjoint unions.
    """
    stack = [graph]
    while stack:
        current = stack.pop()
        if _is_tree(current) or _is_tree(complement(current)):
            continue

        parts = components(current)
        if len(parts) > 1:
            stack.extend(induced(current, part)[0] for part in parts)
            continue

        flipped = complement(current)
        parts = components(flipped)
        if len(parts) == 1:
            return False
        stack.extend(induced(flipped, part)[0] for part in parts)

    return True
