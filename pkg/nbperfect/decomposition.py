"""
Modular decomposition.

The decomposer splits a vertex set by connectivity (parallel nodes) and co-connectivity (series
nodes). Connected and co-connected sets are neighborhood (prime) nodes whose children are the
maximal strong modules, computed with two vertex partition refinements and a module closure.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, anticomponents, components, induced
from .typing import EdgeTuple, NodeKind

__all__ = (
    "DecompositionError",
    "DecompositionFailure",
    "DecompositionVerdict",
    "MDNode",
    "MDTree",
    "decompose",
    "dump",
    "is_module",
    "materialize",
    "maximal_modules_without",
    "module_closure",
    "quotient",
    "validate",
)

logger = logging.getLogger(__name__)


class DecompositionError(Exception):
    """Raised for invalid decomposition tree queries."""


@dataclass(frozen=True, kw_only=True, slots=True)
class MDNode:
    """
    Node of a modular decomposition tree.
    """

    id: int
    """The id of the node in its tree."""

    kind: NodeKind
    """The kind of the node."""

    children: tuple[int, ...] = ()
    """Child node ids, ordered by their smallest vertex."""

    rep: int
    """The smallest vertex of the module of the node (the vertex itself for leaves)."""

    size: int
    """The number of vertices in the module of the node."""

    quotient: Graph | None = None
    """The quotient graph of N-nodes. Quotient vertex `i` corresponds to `children[i]`."""

    parent: int | None = None
    """The id of the parent node."""

    @property
    def is_leaf(self) -> bool:
        return self.kind == "leaf"


class MDTree:
    """
    Immutable modular decomposition tree.

    Nodes are stored in a pool and referenced by id. The modules of internal nodes are not
    stored, use `vertices()` to materialize them.
    """

    __slots__ = ("_graph", "_leaf_of", "_nodes", "_post_order", "_root")

    def __init__(self, *, graph: Graph, nodes: Sequence[MDNode], root: int) -> None:
        """
        Initialization.

        Arguments:
            graph: The decomposed graph.
            nodes: The node pool, `nodes[i].id` must be `i`.
            root: The id of the root node.
        """
        self._graph = graph
        self._nodes = tuple(nodes)
        self._root = root
        self._leaf_of = {node.rep: node.id for node in self._nodes if node.is_leaf}
        self._post_order: tuple[int, ...] | None = None

    @property
    def graph(self) -> Graph:
        """
        The decomposed graph.
        """
        return self._graph

    @property
    def nodes(self) -> tuple[MDNode, ...]:
        """
        The node pool of the tree.
        """
        return self._nodes

    @property
    def root(self) -> int:
        """
        The id of the root node.
        """
        return self._root

    def __getitem__(self, node_id: int) -> MDNode:
        return self._nodes[node_id]

    def __len__(self) -> int:
        return len(self._nodes)

    def leaf_of(self, vertex: int) -> int:
        """
        Returns the id of the leaf node of the given vertex.
        """
        return self._leaf_of[vertex]

    def post_order(self) -> tuple[int, ...]:
        """
        Returns the node ids of the tree in post-order (children before their parent).
        """
        if self._post_order is None:
            order: list[int] = []
            stack: list[tuple[int, bool]] = [(self._root, False)]
            while stack:
                node_id, expanded = stack.pop()
                if expanded:
                    order.append(node_id)
                    continue

                stack.append((node_id, True))
                stack.extend((c, False) for c in reversed(self._nodes[node_id].children))

            self._post_order = tuple(order)

        return self._post_order

    def vertices(self, node_id: int) -> list[int]:
        """
        Returns the sorted module of the given node.
        """
        result: list[int] = []
        stack = [node_id]
        while stack:
            node = self._nodes[stack.pop()]
            if node.is_leaf:
                result.append(node.rep)
            else:
                stack.extend(node.children)

        result.sort()
        return result

    def n_nodes(self, kind: NodeKind | None = None) -> int:
        """
        Returns the number of nodes of the given kind (all nodes if `kind` is `None`).
        """
        return sum(1 for node in self._nodes if kind is None or node.kind == kind)


def module_closure(graph: Graph, seed: Iterable[int], scope: Iterable[int] | None = None) -> set[int]:
    """
    Returns the smallest module of `graph[scope]` that contains `seed`.

    Every vertex that is adjacent to some but not all vertices of the current set is added
    until no such vertex remains. The work is linear in the size of the closure's neighborhood.

    Arguments:
        graph: The host graph.
        seed: The vertices the module must contain.
        scope: The vertex set of the induced subgraph to work in, all vertices if `None`.
    """
    allowed: set[int] | range = graph.vertices() if scope is None else set(scope)
    inside: set[int] = set()
    count: dict[int, int] = {}
    full: set[int] = set()
    _close(graph, allowed, inside, count, full, list(seed))
    return inside


def _close(
    graph: Graph,
    scope: set[int] | range,
    inside: set[int],
    count: dict[int, int],
    full: set[int],
    queue: list[int],
) -> None:
    """
    Extends `inside` with the vertices in `queue` and closes it into a module of `graph[scope]`.

    `count` holds the number of inside neighbors of every touched outside vertex, `full` the
    outside vertices that are adjacent to every inside vertex. Both are updated in place.
    """
    while queue:
        y = queue.pop()
        if y in inside:
            continue

        inside.add(y)
        count.pop(y, None)
        full.discard(y)
        size = len(inside)
        nbrs = graph.neighbor_set(y)
        for x in [x for x in full if x not in nbrs]:
            full.discard(x)
            queue.append(x)

        for x in graph.neighbors(y):
            if x in inside or x not in scope:
                continue

            c = count.get(x, 0) + 1
            count[x] = c
            if c == size:
                full.add(x)
            else:
                queue.append(x)


def is_module(graph: Graph, vertices: Iterable[int], scope: Iterable[int] | None = None) -> bool:
    """
    Returns whether the given nonempty vertex set is a module of `graph[scope]`.
    """
    candidate = set(vertices)
    return len(module_closure(graph, candidate, scope)) == len(candidate)


class _Refinement:
    """
    Vertex partition refinement that computes the maximal modules not containing a given vertex.

    Parts are only ever split. Every split records the smaller piece, whose vertices are later
    used to make the two pieces mutually uniform. A vertex takes part in O(log n) smaller pieces.
    """

    __slots__ = ("_graph", "_part_of", "_parts", "_pending")

    def __init__(self, graph: Graph, scope: Iterable[int]) -> None:
        self._graph = graph
        self._parts: list[set[int]] = [set(scope)]
        self._part_of: dict[int, int] = dict.fromkeys(self._parts[0], 0)
        self._pending: list[list[int]] = []

    def run(self, pivot: int) -> list[list[int]]:
        self._isolate(pivot)
        self._refine(self._graph.neighbors(pivot), self._part_of[pivot])
        while self._pending:
            small = self._pending.pop()
            self._settle(small)

        result = [sorted(part) for i, part in enumerate(self._parts) if part and pivot not in part]
        result.sort(key=lambda part: part[0])
        return result

    def _isolate(self, pivot: int) -> None:
        # The pivot is a part of its own, it never takes part in a pending split.
        self._parts[0].discard(pivot)
        self._parts.append({pivot})
        self._part_of[pivot] = len(self._parts) - 1

    def _refine(self, subset: Iterable[int], skip: int | None) -> None:
        """
        Splits every part (except `skip`) into its intersection with `subset` and the rest.
        """
        touched: dict[int, list[int]] = {}
        part_of = self._part_of
        for x in subset:
            p = part_of.get(x)
            if p is not None and p != skip:
                touched.setdefault(p, []).append(x)

        for p, members in touched.items():
            part = self._parts[p]
            if len(members) == len(part):
                continue

            new_id = len(self._parts)
            new_part = set(members)
            part.difference_update(new_part)
            self._parts.append(new_part)
            for x in members:
                part_of[x] = new_id

            self._pending.append(list(new_part if len(new_part) <= len(part) else part))

    def _settle(self, small: list[int]) -> None:
        """
        Makes a freshly split off piece and the rest of its former part mutually uniform.
        """
        graph, part_of = self._graph, self._part_of
        members = set(small)
        adjacent: dict[int, list[int]] = {}
        for u in small:
            nbrs = graph.neighbors(u)
            self._refine(nbrs, part_of[u])
            for w in nbrs:
                if w not in members and w in part_of:
                    adjacent.setdefault(w, []).append(u)

        # Outside vertices adjacent to the piece split it by their neighborhoods.
        for w, nbrs_in_piece in adjacent.items():
            self._refine(nbrs_in_piece, part_of[w])


def maximal_modules_without(
    graph: Graph, vertex: int, scope: Iterable[int] | None = None
) -> list[list[int]]:
    """
    Returns the maximal modules of `graph[scope]` that do not contain `vertex`.

    The modules partition `scope - {vertex}` and are ordered by their smallest vertex.
    """
    return _Refinement(graph, graph.vertices() if scope is None else scope).run(vertex)


def _prime_children(graph: Graph, scope: list[int]) -> list[list[int]]:
    """
    Returns the maximal strong modules of a connected and co-connected vertex set.
    """
    v = scope[0]
    parts_v = maximal_modules_without(graph, v, scope)

    # Find a vertex outside the maximal strong module of v: its closure with v is everything.
    allowed = set(scope)
    inside: set[int] = set()
    count: dict[int, int] = {}
    full: set[int] = set()
    _close(graph, allowed, inside, count, full, [v])
    outsider: int | None = None
    for part in parts_v:
        w = part[0]
        if w in inside:
            continue

        _close(graph, allowed, inside, count, full, [w])
        if len(inside) == len(allowed):
            outsider = w
            break

    if outsider is None:
        raise DecompositionError("Vertex set is not connected and co-connected.")

    parts_w = maximal_modules_without(graph, outsider, scope)
    module_v = next(part for part in parts_w if v in part)
    in_module_v = set(module_v)
    result = [module_v, *(part for part in parts_v if part[0] not in in_module_v)]
    result.sort(key=lambda part: part[0])
    return result


def decompose(graph: Graph) -> MDTree:
    """
    Builds the modular decomposition tree of the given graph.

    The result is deterministic: children are ordered by their smallest vertex, and node ids are
    assigned in depth-first creation order.

    Raises:
        DecompositionError: If the graph has no vertices.
    """
    if graph.n < 1:
        raise DecompositionError("Cannot decompose the empty graph.")

    kinds: list[NodeKind] = []
    reps: list[int] = []
    sizes: list[int] = []
    parents: list[int | None] = []
    children: list[list[int]] = []
    quotients: list[Graph | None] = []

    def new_node(vertices: list[int], parent: int | None) -> int:
        node_id = len(kinds)
        kinds.append("leaf")
        reps.append(vertices[0])
        sizes.append(len(vertices))
        parents.append(parent)
        children.append([])
        quotients.append(None)
        if parent is not None:
            children[parent].append(node_id)
        return node_id

    stack: list[tuple[list[int], int | None]] = [(list(graph.vertices()), None)]
    while stack:
        vertices, parent = stack.pop()
        node_id = new_node(vertices, parent)
        if len(vertices) == 1:
            continue

        parts = components(graph, vertices)
        if len(parts) > 1:
            kinds[node_id] = "P"
        else:
            parts = anticomponents(graph, vertices)
            if len(parts) > 1:
                kinds[node_id] = "S"
            else:
                kinds[node_id] = "N"
                parts = _prime_children(graph, vertices)
                quotients[node_id] = _quotient_of(graph, parts)

        stack.extend((part, node_id) for part in reversed(parts))

    nodes = [
        MDNode(
            id=i,
            kind=kinds[i],
            children=tuple(children[i]),
            rep=reps[i],
            size=sizes[i],
            quotient=quotients[i],
            parent=parents[i],
        )
        for i in range(len(kinds))
    ]
    logger.debug(
        "Decomposed graph (n=%d, m=%d) into %d nodes, %d N-nodes",
        graph.n,
        graph.m,
        len(nodes),
        sum(1 for k in kinds if k == "N"),
    )
    return MDTree(graph=graph, nodes=nodes, root=0)


def _quotient_of(graph: Graph, parts: Sequence[Sequence[int]]) -> Graph:
    """
    Builds the quotient graph of the given modules from one representative per module.
    """
    index = {v: i for i, part in enumerate(parts) for v in part}
    adj: list[set[int]] = [set() for _ in parts]
    for i, part in enumerate(parts):
        for x in graph.neighbors(part[0]):
            j = index.get(x)
            if j is not None and j != i:
                adj[i].add(j)

    return Graph([sorted(nbrs) for nbrs in adj])


def quotient(tree: MDTree, node_id: int) -> Graph:
    """
    Returns the quotient graph of an internal node: one vertex per child, in child order.

    The quotient of P-nodes is edgeless, that of S-nodes is complete.

    Raises:
        DecompositionError: If the node is a leaf.
    """
    node = tree[node_id]
    if node.is_leaf:
        raise DecompositionError(f"Leaf node {node_id} has no quotient.")
    if node.quotient is not None:
        return node.quotient

    k = len(node.children)
    if node.kind == "P":
        return Graph([[] for _ in range(k)])

    return Graph([[j for j in range(k) if j != i] for i in range(k)])


def materialize(tree: MDTree, node_id: int) -> tuple[Graph, tuple[int, ...]]:
    """
    Returns the subgraph induced by the module of the node and the relabeling map.
    """
    return induced(tree.graph, tree.vertices(node_id))


@dataclass(frozen=True, kw_only=True, slots=True)
class DecompositionFailure:
    """
    A rule violation found by `validate()`.
    """

    node: int | None
    rule: str
    message: str


@dataclass(frozen=True, kw_only=True, slots=True)
class DecompositionVerdict:
    """
    Result of `validate()`.
    """

    failures: list[DecompositionFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return len(self.failures) == 0


def _is_prime(graph: Graph) -> bool:
    """
    Returns whether the graph has only trivial modules (every pair closes to the full vertex set).
    """
    if graph.n < 3:
        return False

    return all(len(module_closure(graph, pair)) == graph.n for pair in combinations(graph.vertices(), 2))


def validate(tree: MDTree, graph: Graph) -> DecompositionVerdict:
    """
    Checks the decomposition tree against the definitions.

    The checked rules are `leaves`, `node-count`, `quotient-size`, `children`, `partition`,
    `module`, `P-children=components`, `S-children=anticomponents`, `N-connected`,
    `N-quotient edges` and `N-quotient prime`.
    """
    failures: list[DecompositionFailure] = []

    def fail(node: int | None, rule: str, message: str) -> None:
        failures.append(DecompositionFailure(node=node, rule=rule, message=message))

    n = graph.n
    leaves = sorted(node.rep for node in tree.nodes if node.is_leaf)
    if leaves != list(range(n)):
        fail(None, "leaves", f"Expected one leaf per vertex, found {len(leaves)} leaves.")
    if len(tree) >= 2 * n and n > 0:
        fail(None, "node-count", f"{len(tree)} nodes for {n} vertices.")
    quotient_total = sum(len(node.children) for node in tree.nodes if node.kind == "N")
    if quotient_total > 2 * n:
        fail(None, "quotient-size", f"Quotient sizes sum to {quotient_total}.")

    for node in tree.nodes:
        if node.is_leaf:
            continue

        h = node.id
        module = tree.vertices(h)
        if len(node.children) < 2:
            fail(h, "children", "Internal node with less than two children.")
            continue

        child_sets = [tree.vertices(c) for c in node.children]
        if sorted(v for part in child_sets for v in part) != module:
            fail(h, "partition", "Child modules do not partition the module of the node.")
        if not is_module(graph, module):
            fail(h, "module", f"Vertex set {module} is not a module.")

        expected = {frozenset(part) for part in child_sets}
        if node.kind == "P":
            if {frozenset(part) for part in components(graph, module)} != expected:
                fail(h, "P-children=components", "Children are not the components.")
        elif node.kind == "S":
            if {frozenset(part) for part in anticomponents(graph, module)} != expected:
                fail(h, "S-children=anticomponents", "Children are not the anticomponents.")
        else:
            if len(components(graph, module)) > 1 or len(anticomponents(graph, module)) > 1:
                fail(h, "N-connected", "N-node module is not connected and co-connected.")

            pi = node.quotient
            if pi is None or pi.n != len(child_sets):
                fail(h, "N-quotient edges", "Missing or mis-sized quotient.")
                continue

            for i, j in combinations(range(pi.n), 2):
                if pi.has_edge(i, j) != graph.has_edge(child_sets[i][0], child_sets[j][0]):
                    fail(h, "N-quotient edges", f"Quotient adjacency of {i} and {j} is wrong.")
                    break

            if not _is_prime(pi):
                fail(h, "N-quotient prime", "The quotient has a nontrivial module.")

    for failure in failures:
        logger.debug("Decomposition check failed at node %s: %s", failure.node, failure.rule)

    return DecompositionVerdict(failures=failures)


def _format_edges(edges: Iterable[EdgeTuple]) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)


def dump(tree: MDTree) -> str:
    """
    Formats the tree as indented text, one node per line: `<kind> [vertices] (quotient edges)`.
    """
    lines: list[str] = []
    stack: list[tuple[int, int]] = [(tree.root, 0)]
    while stack:
        node_id, depth = stack.pop()
        node = tree[node_id]
        line = f"{'  ' * depth}{node.kind} [{', '.join(map(str, tree.vertices(node_id)))}]"
        if node.quotient is not None:
            line += f" ({_format_edges(node.quotient.edges())})"
        lines.append(line)
        stack.extend((c, depth + 1) for c in reversed(node.children))

    return "\n".join(lines)
