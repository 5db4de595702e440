from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from typing import TYPE_CHECKING

from .typing import EdgeTuple

if TYPE_CHECKING:
    import networkx as nx

__all__ = (
    "Graph",
    "GraphError",
    "anticomponents",
    "complement",
    "components",
    "disjoint_union_all",
    "format_text",
    "from_edge_list",
    "induced",
    "join_all",
    "parse_text",
    "relabel",
    "to_networkx",
)

logger = logging.getLogger(__name__)


class GraphError(Exception):
    """Raised for invalid graph construction or malformed graph input."""


class Graph:
    """
    Immutable, undirected, simple graph on the vertices `0..n-1`.

    Adjacency is stored as one sorted neighbor tuple per vertex. Neighbor sets
    are created lazily for constant time adjacency tests.

    Use `from_edge_list()` (or one of the graph operations of this module) to create instances.
    """

    __slots__ = ("_adj", "_m", "_n", "_neighbor_sets")

    def __init__(self, adj: Sequence[Sequence[int]]) -> None:
        """
        Initialization.

        The given adjacency is trusted: it must be symmetric, sorted, loop-free and
        duplicate-free. Use `from_edge_list()` for unchecked input.

        Arguments:
            adj: Sorted neighbor sequence of every vertex.
        """
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(nbrs) for nbrs in adj)
        self._n = len(self._adj)
        self._m = sum(len(nbrs) for nbrs in self._adj) // 2
        self._neighbor_sets: list[frozenset[int] | None] = [None] * self._n

    @property
    def n(self) -> int:
        """
        The number of vertices.
        """
        return self._n

    @property
    def m(self) -> int:
        """
        The number of edges.
        """
        return self._m

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """
        Sorted neighbor tuple of every vertex.
        """
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        """
        Returns the open neighborhood of `v` as a set.
        """
        result = self._neighbor_sets[v]
        if result is None:
            result = frozenset(self._adj[v])
            self._neighbor_sets[v] = result

        return result

    def closed_neighbor_set(self, v: int) -> frozenset[int]:
        """
        Returns the closed neighborhood `N[v]` of `v`.
        """
        return self.neighbor_set(v) | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def edges(self) -> Iterator[EdgeTuple]:
        """
        Yields every edge once as `(u, v)` with `u < v`, in lexicographic order.
        """
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Creates a graph on `n` vertices with the given edges.

    Duplicate edges (in either orientation) are merged.

    Arguments:
        n: The number of vertices.
        edges: The edges of the graph.

    Raises:
        GraphError: If `n` is negative, an edge is a loop, or it has an endpoint out of range.
    """
    if n < 0:
        raise GraphError(f"Negative vertex count: {n}")

    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"Edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise GraphError(f"Loop edge: ({u}, {v})")

        nbrs[u].add(v)
        nbrs[v].add(u)

    return Graph([sorted(s) for s in nbrs])


def complement(graph: Graph) -> Graph:
    """
    Returns the complement of the given graph.
    """
    n = graph.n
    adj = []
    for v in range(n):
        nbrs = graph.neighbor_set(v)
        adj.append([u for u in range(n) if u != v and u not in nbrs])

    return Graph(adj)


def induced(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """
    Creates the subgraph induced by the given vertex set.

    Vertices of the subgraph are numbered by the increasing order of the original ids.

    Arguments:
        graph: The host graph.
        vertices: The vertices to keep.

    Returns:
        The induced subgraph and the relabeling map: item `i` is the original id of vertex `i`.

    Raises:
        GraphError: If a vertex is out of range.
    """
    labels = tuple(sorted(set(vertices)))
    for v in labels:
        if not 0 <= v < graph.n:
            raise GraphError(f"Vertex out of range: {v} with n={graph.n}")

    index = {v: i for i, v in enumerate(labels)}
    adj = [[index[u] for u in graph.neighbors(v) if u in index] for v in labels]
    return Graph(adj), labels


def relabel(graph: Graph, permutation: Sequence[int]) -> Graph:
    """
    Returns an isomorphic copy of the graph in which vertex `v` becomes `permutation[v]`.

    Raises:
        GraphError: If `permutation` is not a permutation of the vertices.
    """
    if sorted(permutation) != list(range(graph.n)):
        raise GraphError("Invalid permutation.")

    return from_edge_list(graph.n, ((permutation[u], permutation[v]) for u, v in graph.edges()))


def disjoint_union_all(parts: Sequence[Graph]) -> Graph:
    """
    Returns the disjoint union of the given graphs.

    Vertices of `parts[i]` are shifted by the total vertex count of the preceding parts.

    Raises:
        GraphError: If `parts` is empty.
    """
    if len(parts) == 0:
        raise GraphError("Disjoint union of an empty sequence.")

    adj: list[list[int]] = []
    offset = 0
    for part in parts:
        adj.extend([u + offset for u in nbrs] for nbrs in part.adj)
        offset += part.n

    return Graph(adj)


def join_all(parts: Sequence[Graph]) -> Graph:
    """
    Returns the join of the given graphs: their disjoint union plus every edge between different parts.

    Raises:
        GraphError: If `parts` is empty.
    """
    if len(parts) == 0:
        raise GraphError("Join of an empty sequence.")

    return complement(disjoint_union_all([complement(p) for p in parts]))


def components(graph: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """
    Returns the connected components of the graph (or of the subgraph induced by `within`).

    Components are sorted, and ordered by their smallest vertex.
    """
    allowed = set(graph.vertices() if within is None else within)
    seen: set[int] = set()
    result: list[list[int]] = []
    for start in sorted(allowed):
        if start in seen:
            continue

        seen.add(start)
        stack, part = [start], [start]
        while stack:
            v = stack.pop()
            for u in graph.neighbors(v):
                if u in allowed and u not in seen:
                    seen.add(u)
                    stack.append(u)
                    part.append(u)

        result.append(sorted(part))

    return result


def anticomponents(graph: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """
    Returns the components of the complement of the graph (or of the subgraph induced by `within`).

    The complement is never built: every search step scans the unvisited vertices once, so
    the total work is linear in the size of the (induced) graph.
    """
    unvisited = set(graph.vertices() if within is None else within)
    result: list[list[int]] = []
    while unvisited:
        start = min(unvisited)
        unvisited.discard(start)
        stack, part = [start], [start]
        while stack:
            v = stack.pop()
            nbrs = graph.neighbor_set(v)
            found = [u for u in unvisited if u not in nbrs]
            for u in found:
                unvisited.discard(u)
            stack.extend(found)
            part.extend(found)

        result.append(sorted(part))

    result.sort(key=lambda part: part[0])
    return result


def parse_text(text: str) -> Graph:
    """
    Parses the line-oriented text format.

    The format consists of a `p <n> <m>` header line and one `e <u> <v>` line per edge.
    Lines starting with `c` are comments, blank lines are ignored.

    Raises:
        GraphError: If the input is malformed.
    """
    n: int | None = None
    m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue

        tokens = line.split()
        try:
            if tokens[0] == "p" and len(tokens) == 3:
                if n is not None:
                    raise GraphError(f"Line {lineno}: duplicate header.")
                n, m = int(tokens[1]), int(tokens[2])
            elif tokens[0] == "e" and len(tokens) == 3:
                if n is None:
                    raise GraphError(f"Line {lineno}: edge before header.")
                edges.append((int(tokens[1]), int(tokens[2])))
            else:
                raise GraphError(f"Line {lineno}: unrecognized line: {line!r}")
        except ValueError as e:
            raise GraphError(f"Line {lineno}: invalid integer in {line!r}") from e

    if n is None:
        raise GraphError("Missing 'p <n> <m>' header.")
    if len(edges) != m:
        raise GraphError(f"Header declares {m} edges, found {len(edges)}.")

    graph = from_edge_list(n, edges)
    if graph.m != m:
        raise GraphError(f"Duplicate edges: {m} declared, {graph.m} distinct.")

    logger.debug("Parsed graph with n=%d, m=%d", graph.n, graph.m)
    return graph


def format_text(graph: Graph, comments: Iterable[str] = ()) -> str:
    """
    Formats the graph in the canonical text format (edges in lexicographic order).

    Arguments:
        graph: The graph to format.
        comments: Comment lines to emit before the header (without the `c` prefix).
    """
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {graph.n} {graph.m}")
    lines.extend(f"e {u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def to_networkx(graph: Graph) -> nx.Graph:
    """
    Converts the graph into a `networkx.Graph` with the same vertex ids.
    """
    import networkx as nx

    result = nx.Graph()
    result.add_nodes_from(graph.vertices())
    result.add_edges_from(graph.edges())
    return result
