"""
Optimal neighborhood-covering, neighborhood-independent, 2-independent and dominating sets of
P4-tidy graphs and tree-cographs.

`optimal_lists()` traverses the decomposition tree in post-order. Leaves, P-nodes and S-nodes are
handled uniformly; N-nodes are delegated to the subroutine of the graph's class. Whenever a
choice is arbitrary, the smallest vertex id is taken.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .decomposition import MDTree, decompose
from .graph import Graph
from .recognition import classify
from .structure import NodeClass, expanded_host_tree
from .treekit import (
    complement_ni_pair,
    total_dom_pair,
    tree_alpha2,
    tree_domination,
    tree_matching_cover,
)
from .typing import EdgeTuple, Element

__all__ = (
    "JoinParams",
    "MixedSet",
    "OptimalLists",
    "format_lists",
    "join_formulas",
    "nnode_p4tidy",
    "nnode_treecograph",
    "optimal_lists",
    "parameters",
    "parse_lists",
)

logger = logging.getLogger(__name__)

MixedSet = tuple[Element, ...]
"""
Ordered collection of distinct vertices and edges.
"""


@dataclass(frozen=True, kw_only=True, slots=True)
class OptimalLists:
    """
    Certificate lists of a graph (or of the module of a decomposition node).
    """

    an: MixedSet
    """Maximum neighborhood-independent set."""

    rn: tuple[int, ...]
    """Minimum neighborhood-covering set."""

    a2: tuple[int, ...]
    """Maximum 2-independent set."""

    d: tuple[int, ...]
    """Minimum dominating set."""

    pairings: int = 0
    """The number of vertex pairs built at S-nodes while computing the lists."""


@dataclass(frozen=True, kw_only=True, slots=True)
class JoinParams:
    """
    Parameter values of a graph that determine the parameters of its joins.
    """

    gamma: int
    pn: int
    a2: int
    an: int


def _edge(u: int, v: int) -> EdgeTuple:
    return (u, v) if u < v else (v, u)


def join_formulas(parts: Sequence[JoinParams]) -> JoinParams:
    """
    Computes the parameters of the join of graphs from the parameters of the operands.

    Arguments:
        parts: The parameters of the operands, at least two.

    Raises:
        ValueError: If there are less than two operands.
    """
    k = len(parts)
    if k < 2:
        raise ValueError("A join needs at least two operands.")

    gamma = min(2, *(p.gamma for p in parts))
    cover = min(*(p.gamma + 1 for p in parts), *(p.pn for p in parts))
    if k == 2:
        first, second = parts
        return JoinParams(gamma=gamma, pn=cover, a2=1, an=min(first.a2, second.a2))

    return JoinParams(gamma=gamma, pn=min(3, cover), a2=1, an=1)


def _leaf(v: int) -> OptimalLists:
    return OptimalLists(an=(v,), rn=(v,), a2=(v,), d=(v,))


def _concat(parts: Sequence[OptimalLists]) -> OptimalLists:
    return OptimalLists(
        an=tuple(x for p in parts for x in p.an),
        rn=tuple(v for p in parts for v in p.rn),
        a2=tuple(v for p in parts for v in p.a2),
        d=tuple(v for p in parts for v in p.d),
        pairings=sum(p.pairings for p in parts),
    )


def _shortest(candidates: Iterable[tuple[int, ...]]) -> tuple[int, ...]:
    # min() keeps the first of the equally short candidates.
    return min(candidates, key=len)


def _join(reps: Sequence[int], parts: Sequence[OptimalLists]) -> OptimalLists:
    """
    Builds the lists of an S-node from the representatives and lists of its children.
    """
    k = len(parts)
    pairings = sum(p.pairings for p in parts)
    d = _shortest([*(p.d for p in parts), (reps[0], reps[1])])

    # Each child's dominating set plus a vertex outside the child, then each child's cover.
    outside = [reps[1] if i == 0 else reps[0] for i in range(k)]
    extended = (p.d + (outside[i],) for i, p in enumerate(parts))
    rn = _shortest([*extended, *(p.rn for p in parts)])

    if k == 2:
        first, second = parts[0].a2, parts[1].a2
        an: MixedSet = tuple(_edge(u, v) for u, v in zip(first, second, strict=False))
        pairings += len(an)
    else:
        an = (_edge(reps[0], reps[1]),)
        rn = _shortest([rn, (reps[0], reps[1], reps[2])])

    return OptimalLists(an=an, rn=rn, a2=(reps[0],), d=d, pairings=pairings)


def nnode_p4tidy(tree: MDTree, node_id: int, cls: NodeClass) -> OptimalLists:
    """
    Computes the lists of an N-node of a P4-tidy graph.

    The lists only depend on the quotient structure and the smallest vertex of every child.

    Arguments:
        tree: The decomposition tree.
        node_id: The id of the N-node.
        cls: The class of the node.

    Raises:
        ValueError: If the class does not match the node.
    """
    node = tree[node_id]
    reps = [tree[c].rep for c in node.children]

    if cls.tag in ("C5", "P5", "P5bar"):
        if len(cls.order) != 5 or len(reps) != 5:
            raise ValueError(f"Node {node_id} is not a five-vertex prime node.")

        v1, v2, v3, v4, v5 = (reps[q] for q in cls.order)
        if cls.tag == "C5":
            return OptimalLists(an=(_edge(v1, v2), _edge(v4, v5)), rn=(v1, v3, v5), a2=(v1,), d=(v1, v3))
        if cls.tag == "P5":
            return OptimalLists(an=(_edge(v1, v2), _edge(v4, v5)), rn=(v2, v4), a2=(v1, v4), d=(v2, v4))
        return OptimalLists(an=(_edge(v1, v5), _edge(v2, v4)), rn=(v1, v2), a2=(v1,), d=(v1, v2))

    spider = cls.spider
    if cls.tag != "Spider" or spider is None:
        raise ValueError(f"Node {node_id} is not classified as a P4-tidy node.")

    ends = [reps[q] for q in spider.ends]
    body = [reps[q] for q in spider.body]
    fat = spider.fat
    if spider.kind == "starfish":
        rn = list(body)
        if fat is not None and fat[1] == "2K1" and fat[0] in spider.body:
            i = spider.body.index(fat[0])
            rn[i] = ends[i]

        return OptimalLists(
            an=tuple(_edge(s, c) for s, c in zip(ends, body, strict=True)),
            rn=tuple(rn),
            a2=tuple(ends),
            d=tuple(body),
        )

    fat_leg = -1
    if fat is not None:
        fat_leg = spider.ends.index(fat[0]) if fat[0] in spider.ends else spider.body.index(fat[0])

    a, b = [i for i in range(spider.t) if i != fat_leg][:2]
    return OptimalLists(
        an=(_edge(body[a], ends[b]),),
        rn=(body[a], body[b]),
        a2=(body[a],),
        d=(body[a], body[b]),
    )


def _first_non_edge(tree: Graph) -> EdgeTuple:
    """
    Returns the lexicographically first pair of nonadjacent vertices of a tree on at least three vertices.
    """
    for u in tree.vertices():
        if tree.degree(u) < tree.n - 1:
            nbrs = tree.closed_neighbor_set(u)
            return u, next(v for v in tree.vertices() if v not in nbrs)

    raise ValueError("The tree is complete.")


def nnode_treecograph(tree: MDTree, node_id: int, cls: NodeClass) -> OptimalLists:
    """
    Computes the lists of an N-node of a tree-cograph.

    A tree-like node gets its lists from the tree routines run on the subgraph it induces. The
    lists of a co-tree-like node are built from the tree `T` the complement of its subgraph
    induces: `A_2` is a total dominating pair of `T`, `A_n` a neighborhood-independent pair
    of edges of the complement of `T` (one edge if there is none), and both `D` and `R_n` are a
    leaf of `T` and its neighbor.

    Arguments:
        tree: The decomposition tree.
        node_id: The id of the N-node.
        cls: The class of the node, `TreeLike` or `CoTreeLike`.

    Raises:
        ValueError: If the class does not match the node.
    """
    if cls.tag not in ("TreeLike", "CoTreeLike"):
        raise ValueError(f"Node {node_id} is not classified as a tree-cograph node.")

    host, labels = expanded_host_tree(tree, node_id, cls.tag)

    def original(vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(labels[v] for v in vertices)

    def original_edges(edges: Iterable[EdgeTuple]) -> MixedSet:
        return tuple(_edge(labels[u], labels[v]) for u, v in edges)

    if cls.tag == "TreeLike":
        matching, cover = tree_matching_cover(host)
        return OptimalLists(
            an=original_edges(matching),
            rn=original(cover),
            a2=original(tree_alpha2(host)),
            d=original(tree_domination(host)),
        )

    pair = total_dom_pair(host)
    ni_pair = complement_ni_pair(host)
    leaf = min(v for v in host.vertices() if host.degree(v) == 1)
    cover = (leaf, host.neighbors(leaf)[0])
    return OptimalLists(
        an=original_edges(ni_pair if ni_pair is not None else [_first_non_edge(host)]),
        rn=original(cover),
        a2=original(pair if pair is not None else (0,)),
        d=original(cover),
    )


def optimal_lists(
    graph: Graph,
    tree: MDTree | None = None,
    classes: dict[int, NodeClass] | None = None,
) -> OptimalLists:
    """
    Computes optimal certificate lists of a P4-tidy graph or tree-cograph.

    The length of the returned lists are the neighborhood covering number, the neighborhood
    independence number, the 2-independence number and the domination number of the graph.

    Arguments:
        graph: The graph.
        tree: The decomposition tree of the graph, if it is already available.
        classes: The N-node classes of the decomposition tree, if they are already available.
                 The classes also decide which N-node subroutine is used.

    Raises:
        UnsupportedClassError: If the graph is neither P4-tidy nor a tree-cograph.
    """
    tree = decompose(graph) if tree is None else tree
    if classes is None:
        _, classes = classify(tree)

    lists: list[OptimalLists | None] = [None] * len(tree)

    def take(node_ids: Sequence[int]) -> list[OptimalLists]:
        result: list[OptimalLists] = []
        for c in node_ids:
            item = lists[c]
            if item is None:
                raise RuntimeError(f"Node {c} has not been processed.")
            result.append(item)
            lists[c] = None
        return result

    for node_id in tree.post_order():
        node = tree[node_id]
        if node.is_leaf:
            lists[node_id] = _leaf(node.rep)
        elif node.kind == "P":
            lists[node_id] = _concat(take(node.children))
        elif node.kind == "S":
            reps = [tree[c].rep for c in node.children]
            lists[node_id] = _join(reps, take(node.children))
        else:
            cls = classes[node_id]
            nested = take(node.children)
            if cls.tag in ("TreeLike", "CoTreeLike"):
                result = nnode_treecograph(tree, node_id, cls)
            else:
                result = nnode_p4tidy(tree, node_id, cls)
            lists[node_id] = _with_pairings(result, sum(p.pairings for p in nested))

    root = lists[tree.root]
    if root is None:
        raise RuntimeError("The root has not been processed.")

    logger.debug(
        "Optimal lists: |R_n|=%d, |A_n|=%d, |A_2|=%d, |D|=%d",
        len(root.rn),
        len(root.an),
        len(root.a2),
        len(root.d),
    )
    return root


def _with_pairings(lists: OptimalLists, pairings: int) -> OptimalLists:
    if pairings == 0:
        return lists

    return OptimalLists(
        an=lists.an, rn=lists.rn, a2=lists.a2, d=lists.d, pairings=lists.pairings + pairings
    )


def parameters(graph: Graph, tree: MDTree | None = None) -> JoinParams:
    """
    Returns the domination number, the neighborhood covering number, the 2-independence number
    and the neighborhood independence number of a P4-tidy graph or tree-cograph.

    Raises:
        UnsupportedClassError: If the graph is neither P4-tidy nor a tree-cograph.
    """
    lists = optimal_lists(graph, tree)
    return JoinParams(gamma=len(lists.d), pn=len(lists.rn), a2=len(lists.a2), an=len(lists.an))


_list_names = ("A_n", "R_n", "A_2", "D")


def format_lists(lists: OptimalLists) -> str:
    """
    Formats the certificate lists as text: a `<list-name> <length>` header line per list
    followed by one `v <id>` or `e <u> <v>` line per element.
    """
    lines: list[str] = []
    for name, items in zip(_list_names, (lists.an, lists.rn, lists.a2, lists.d), strict=True):
        lines.append(f"{name} {len(items)}")
        for x in items:
            lines.append(f"v {x}" if isinstance(x, int) else f"e {x[0]} {x[1]}")

    return "\n".join(lines) + "\n"


def parse_lists(text: str) -> OptimalLists:
    """
    Parses certificate lists in the format `format_lists()` produces.

    Raises:
        ValueError: If the text is malformed.
    """
    found: dict[str, list[Element]] = {}
    current: list[Element] | None = None
    expected: dict[str, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue

        head, args = parts[0], parts[1:]
        try:
            if head in _list_names and len(args) == 1:
                current = found.setdefault(head, [])
                expected[head] = int(args[0])
            elif head == "v" and len(args) == 1 and current is not None:
                current.append(int(args[0]))
            elif head == "e" and len(args) == 2 and current is not None:
                current.append(_edge(int(args[0]), int(args[1])))
            else:
                raise ValueError(f"unexpected line {raw!r}")
        except ValueError as e:
            raise ValueError(f"Line {number}: {e}") from e

    for name in _list_names:
        if len(found.get(name, ())) != expected.get(name, -1):
            raise ValueError(f"List {name} is missing or its length does not match its header.")

    def vertices(name: str) -> tuple[int, ...]:
        items = found[name]
        if not all(isinstance(x, int) for x in items):
            raise ValueError(f"List {name} may only contain vertices.")
        return tuple(x for x in items if isinstance(x, int))

    return OptimalLists(an=tuple(found["A_n"]), rn=vertices("R_n"), a2=vertices("A_2"), d=vertices("D"))
