"""
Classification of neighborhood (prime) nodes and class membership tests.

A P4-tidy N-node has a quotient isomorphic to `C5`, `P5`, the complement of `P5`, or a prime
starfish or urchin, and its children are leaves except the head and at most one fat vertex
(a two-vertex module). A tree-cograph N-node induces a tree or the complement of a tree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

from .decomposition import MDNode, MDTree
from .graph import Graph, complement, from_edge_list

__all__ = (
    "ClassificationError",
    "NodeClass",
    "SpiderPartition",
    "classify_p4tidy_node",
    "classify_treecograph_node",
    "expanded_host_tree",
    "is_p4_tidy",
    "is_tree_cograph",
)

logger = logging.getLogger(__name__)

SpiderKind = Literal["starfish", "urchin"]
FatShape = Literal["K2", "2K1"]
NodeTag = Literal["C5", "P5", "P5bar", "Spider", "TreeLike", "CoTreeLike"]


class ClassificationError(Exception):
    """Raised when a node cannot be classified because it is not an N-node."""


@dataclass(frozen=True, kw_only=True, slots=True)
class SpiderPartition:
    """
    Spider structure of a prime quotient. All vertices are quotient vertices.

    Leg `i` joins `ends[i]` and `body[i]`: in a starfish they are adjacent, in an urchin
    `ends[i]` is adjacent to every body vertex except `body[i]`.
    """

    kind: SpiderKind
    ends: tuple[int, ...]
    body: tuple[int, ...]
    head: int | None = None
    """The quotient vertex of the head module."""

    fat: tuple[int, FatShape] | None = None
    """The quotient vertex of the fat end or body vertex and the graph its module induces."""

    @property
    def t(self) -> int:
        return len(self.ends)


@dataclass(frozen=True, kw_only=True, slots=True)
class NodeClass:
    """
    Classification result of an N-node.
    """

    tag: NodeTag
    order: tuple[int, ...] = ()
    """
    Quotient vertices in cycle order for `C5`, path order for `P5`, and in the path order
    of the complement for `P5bar`.
    """

    spider: SpiderPartition | None = None


def _n_node(tree: MDTree, node_id: int) -> tuple[MDNode, Graph]:
    node = tree[node_id]
    if node.kind != "N" or node.quotient is None:
        raise ClassificationError(f"Node {node_id} is not an N-node.")

    return node, node.quotient


def _path_order(graph: Graph) -> tuple[int, ...] | None:
    """
    Returns the vertices of the graph in path order if it is a path, `None` otherwise.
    """
    if graph.m != graph.n - 1 or any(graph.degree(v) > 2 for v in graph.vertices()):
        return None

    ends = [v for v in graph.vertices() if graph.degree(v) <= 1]
    order, previous = [min(ends)], -1
    while len(order) < graph.n:
        step = [u for u in graph.neighbors(order[-1]) if u != previous]
        if not step:
            return None
        previous = order[-1]
        order.append(step[0])

    return tuple(order)


def _cycle_order(graph: Graph) -> tuple[int, ...] | None:
    if graph.m != graph.n or any(graph.degree(v) != 2 for v in graph.vertices()):
        return None

    order, previous, current = [0], -1, 0
    while True:
        a, b = graph.neighbors(current)
        following = a if a != previous else b
        if following == 0:
            break
        order.append(following)
        previous, current = current, following

    return tuple(order) if len(order) == graph.n else None


def _starfish(pi: Graph) -> tuple[tuple[int, ...], tuple[int, ...], int | None] | None:
    """
    Detects a prime starfish by the degree method.

    The ends are the degree-one vertices, their neighbors are the body, and at most one vertex
    may remain (the head), adjacent to the whole body.

    Returns:
        The aligned ends and body, and the head, or `None` if the graph is not a prime starfish.
    """
    ends = tuple(v for v in pi.vertices() if pi.degree(v) == 1)
    t = len(ends)
    if t < 2:
        return None

    body = tuple(pi.neighbors(s)[0] for s in ends)
    if len(set(body)) != t:
        return None

    # Legs, the body clique and, with a head vertex, t head edges.
    has_head = pi.n == 2 * t + 1
    if pi.n not in (2 * t, 2 * t + 1) or pi.m != t + t * (t - 1) // 2 + (t if has_head else 0):
        return None

    legs = set(ends) | set(body)
    if len(legs) != 2 * t:
        return None

    rest = [v for v in pi.vertices() if v not in legs]
    head = rest[0] if rest else None

    for i, c in enumerate(body):
        nbrs = pi.neighbor_set(c)
        if any(d not in nbrs for d in body[i + 1 :]):
            return None
        if head is not None and head not in nbrs:
            return None

    return ends, body, head


def _spider(pi: Graph) -> tuple[SpiderKind, tuple[int, ...], tuple[int, ...], int | None] | None:
    found = _starfish(pi)
    if found is not None:
        return ("starfish", *found)

    # An urchin has t(t-1) leg edges, a body clique and t head edges.
    k = pi.n
    t, r = k // 2, k % 2
    if t < 3 or pi.m != t * (t - 1) + t * (t - 1) // 2 + r * t:
        return None

    # The complement of an urchin is a starfish whose ends are the urchin's body.
    found = _starfish(complement(pi))
    if found is None:
        return None

    body, ends, head = found
    return "urchin", ends, body, head


def classify_p4tidy_node(tree: MDTree, node_id: int) -> NodeClass | None:
    """
    Classifies an N-node of a P4-tidy graph.

    Arguments:
        tree: The decomposition tree.
        node_id: The id of an N-node of the tree.

    Returns:
        The class of the node, or `None` if the node is not allowed in a P4-tidy graph.

    Raises:
        ClassificationError: If the node is not an N-node.
    """
    node, pi = _n_node(tree, node_id)
    children = [tree[c] for c in node.children]

    if pi.n == 5:
        order = _cycle_order(pi)
        tag: NodeTag = "C5"
        if order is None:
            order, tag = _path_order(pi), "P5"
        if order is None:
            order, tag = _path_order(complement(pi)), "P5bar"
        if order is not None:
            if any(not child.is_leaf for child in children):
                return None
            return NodeClass(tag=tag, order=order)

    found = _spider(pi)
    if found is None:
        return None

    kind, ends, body, head = found
    fat: tuple[int, FatShape] | None = None
    for q in (*ends, *body):
        child = children[q]
        if child.is_leaf:
            continue
        if child.size != 2 or fat is not None:
            return None
        fat = (q, "K2" if child.kind == "S" else "2K1")

    legs = sorted(zip(ends, body, strict=True))
    return NodeClass(
        tag="Spider",
        spider=SpiderPartition(
            kind=kind,
            ends=tuple(s for s, _ in legs),
            body=tuple(c for _, c in legs),
            head=head,
            fat=fat,
        ),
    )


def is_p4_tidy(tree: MDTree) -> bool:
    """
    Returns whether the decomposed graph is P4-tidy: every N-node classifies successfully.
    """
    for node in tree.nodes:
        if node.kind == "N" and classify_p4tidy_node(tree, node.id) is None:
            logger.debug("Node %d rejects P4-tidy classification", node.id)
            return False

    return True


def _is_edgeless_module(node: MDNode, tree: MDTree, kind: Literal["P", "S"]) -> bool:
    return node.kind == kind and all(tree[c].is_leaf for c in node.children)


def classify_treecograph_node(tree: MDTree, node_id: int) -> NodeClass | None:
    """
    Classifies an N-node of a tree-cograph as `TreeLike` (it induces a tree) or
    `CoTreeLike` (it induces the complement of a tree). `TreeLike` is preferred when both hold.

    A non-leaf child of a tree-like node must be an edgeless module at a degree-one
    quotient vertex (twin leaves), that of a co-tree-like node a complete module at a
    vertex of degree `n - 2`.

    Returns:
        The class of the node, or `None` if the node is not allowed in a tree-cograph.

    Raises:
        ClassificationError: If the node is not an N-node.
    """
    node, pi = _n_node(tree, node_id)
    k = pi.n
    children = [tree[c] for c in node.children]

    if pi.m == k - 1 and all(
        child.is_leaf or (_is_edgeless_module(child, tree, "P") and pi.degree(q) == 1)
        for q, child in enumerate(children)
    ):
        return NodeClass(tag="TreeLike")

    if k * (k - 1) // 2 - pi.m == k - 1 and all(
        child.is_leaf or (_is_edgeless_module(child, tree, "S") and pi.degree(q) == k - 2)
        for q, child in enumerate(children)
    ):
        return NodeClass(tag="CoTreeLike")

    return None


def is_tree_cograph(tree: MDTree) -> bool:
    """
    Returns whether the decomposed graph is a tree-cograph: every N-node is tree-like or co-tree-like.
    """
    for node in tree.nodes:
        if node.kind == "N" and classify_treecograph_node(tree, node.id) is None:
            logger.debug("Node %d rejects tree-cograph classification", node.id)
            return False

    return True


def expanded_host_tree(tree: MDTree, node_id: int, tag: NodeTag) -> tuple[Graph, tuple[int, ...]]:
    """
    Returns the tree of a tree-like node (the subgraph it induces) or co-tree-like node
    (the complement of the subgraph it induces).

    The tree is built from the quotient by expanding every non-leaf child into its leaves.

    Arguments:
        tree: The decomposition tree.
        node_id: The id of a classified N-node.
        tag: `"TreeLike"` or `"CoTreeLike"`.

    Returns:
        The tree and the relabeling map (item `i` is the original id of tree vertex `i`).
    """
    node, pi = _n_node(tree, node_id)
    groups = [tree.vertices(c) for c in node.children]
    labels = tuple(sorted(v for group in groups for v in group))
    index = {v: i for i, v in enumerate(labels)}

    if tag == "TreeLike":
        pairs = list(pi.edges())
    else:
        pairs = [(i, j) for i in range(pi.n) for j in range(i + 1, pi.n) if not pi.has_edge(i, j)]

    edges = [(index[u], index[v]) for i, j in pairs for u in groups[i] for v in groups[j]]
    return from_edge_list(len(labels), edges), labels
