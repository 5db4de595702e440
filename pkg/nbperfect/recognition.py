"""
Neighborhood-perfectness recognition for P4-tidy graphs and tree-cographs.

Both recognizers compute per-node flags in one post-order pass over the decomposition tree
and then apply their rules node by node. A firing rule yields a forbidden induced subgraph:
`3K2bar`, `3sun` or `C5` for P4-tidy graphs, `3K2bar` or `P6+3K1` for tree-cographs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

from .decomposition import MDTree, decompose
from .graph import Graph
from .rule import RuleSet, rule
from .structure import (
    NodeClass,
    classify_p4tidy_node,
    classify_treecograph_node,
    expanded_host_tree,
)
from .treekit import tree_alpha, tree_diameter_path, tree_induced_matching
from .typing import ClassTag

__all__ = (
    "NPVerdict",
    "NodeFlags",
    "Recognition",
    "UnsupportedClassError",
    "Witness",
    "c4_flags",
    "classify",
    "p4tidy_classes",
    "recognize",
    "recognize_p4tidy",
    "recognize_treecograph",
    "tc_flags",
    "treecograph_classes",
)

logger = logging.getLogger(__name__)

WitnessPattern = Literal["3K2bar", "3sun", "C5", "P6+3K1"]


class UnsupportedClassError(Exception):
    """Raised for graphs that are neither P4-tidy nor tree-cographs."""


@dataclass(frozen=True, kw_only=True, slots=True)
class NodeFlags:
    """
    Per-node flags, indexed by node id.
    """

    c: tuple[bool, ...]
    """Whether the subgraph of the node contains an induced `C4`."""

    p: tuple[bool, ...] | None = None
    """Whether the subgraph of the node contains an induced `P6`."""

    alpha: tuple[int, ...] | None = None
    """The independence number of the subgraph of the node."""


@dataclass(frozen=True, kw_only=True, slots=True)
class Witness:
    """
    Forbidden induced subgraph found by a recognition rule.
    """

    rule: str
    node: int
    pattern: WitnessPattern
    vertices: tuple[int, ...]
    description: str


@dataclass(frozen=True, kw_only=True, slots=True)
class NPVerdict:
    """
    Neighborhood-perfectness verdict. Negative verdicts carry a witness.
    """

    perfect: bool
    witness: Witness | None = None


@dataclass(frozen=True, kw_only=True, slots=True)
class Recognition:
    """
    Result of `recognize()`.
    """

    class_tag: ClassTag
    verdict: NPVerdict
    tree: MDTree
    classes: dict[int, NodeClass]


def p4tidy_classes(tree: MDTree) -> dict[int, NodeClass]:
    """
    Classifies every N-node of a P4-tidy graph.

    Raises:
        UnsupportedClassError: If the graph is not P4-tidy.
    """
    result: dict[int, NodeClass] = {}
    for node in tree.nodes:
        if node.kind == "N":
            cls = classify_p4tidy_node(tree, node.id)
            if cls is None:
                raise UnsupportedClassError(f"Node {node.id} is not P4-tidy.")
            result[node.id] = cls

    return result


def treecograph_classes(tree: MDTree) -> dict[int, NodeClass]:
    """
    Classifies every N-node of a tree-cograph.

    Raises:
        UnsupportedClassError: If the graph is not a tree-cograph.
    """
    result: dict[int, NodeClass] = {}
    for node in tree.nodes:
        if node.kind == "N":
            cls = classify_treecograph_node(tree, node.id)
            if cls is None:
                raise UnsupportedClassError(f"Node {node.id} is not tree-like or co-tree-like.")
            result[node.id] = cls

    return result


def _non_leaf_children(tree: MDTree, node_id: int) -> list[int]:
    return [c for c in tree[node_id].children if not tree[c].is_leaf]


def _fat_body_2k1(cls: NodeClass) -> int | None:
    """
    Returns the quotient vertex of a body vertex replaced by `2K1`, if there is one.
    """
    spider = cls.spider
    if spider is None or spider.fat is None:
        return None

    q, shape = spider.fat
    return q if shape == "2K1" and q in spider.body else None


def c4_flags(tree: MDTree, classes: dict[int, NodeClass] | None = None) -> NodeFlags:
    """
    Computes for every node of a P4-tidy graph's decomposition whether it contains an induced `C4`.

    A node contains a `C4` if a child does, if it is an S-node with at least two non-leaf
    children, or if it is an N-node whose quotient is the complement of `P5` or a spider with
    a body vertex replaced by `2K1`.

    Arguments:
        tree: The decomposition tree.
        classes: Precomputed N-node classes.

    Raises:
        UnsupportedClassError: If the graph is not P4-tidy.
    """
    classes = p4tidy_classes(tree) if classes is None else classes
    c = [False] * len(tree)
    for node_id in tree.post_order():
        node = tree[node_id]
        if node.is_leaf:
            continue

        if any(c[child] for child in node.children):
            c[node_id] = True
        elif node.kind == "S":
            c[node_id] = len(_non_leaf_children(tree, node_id)) >= 2
        elif node.kind == "N":
            cls = classes[node_id]
            c[node_id] = cls.tag == "P5bar" or _fat_body_2k1(cls) is not None

    return NodeFlags(c=tuple(c))


def tc_flags(tree: MDTree, classes: dict[int, NodeClass] | None = None) -> NodeFlags:
    """
    Computes the `C4`, `P6` and independence number flags of every node of a tree-cograph's decomposition.

    Arguments:
        tree: The decomposition tree.
        classes: Precomputed N-node classes.

    Raises:
        UnsupportedClassError: If the graph is not a tree-cograph.
    """
    classes = treecograph_classes(tree) if classes is None else classes
    size = len(tree)
    c, p, alpha = [False] * size, [False] * size, [1] * size
    for node_id in tree.post_order():
        node = tree[node_id]
        kids = node.children
        if node.kind == "P":
            c[node_id] = any(c[k] for k in kids)
            p[node_id] = any(p[k] for k in kids)
            alpha[node_id] = sum(alpha[k] for k in kids)
        elif node.kind == "S":
            c[node_id] = any(c[k] for k in kids) or len(_non_leaf_children(tree, node_id)) >= 2
            p[node_id] = any(p[k] for k in kids)
            alpha[node_id] = max(alpha[k] for k in kids)
        elif node.kind == "N":
            tag = classes[node_id].tag
            host, _ = expanded_host_tree(tree, node_id, tag)
            if tag == "TreeLike":
                alpha[node_id] = len(tree_alpha(host))
                p[node_id] = len(tree_diameter_path(host)) >= 6
            else:
                alpha[node_id] = 2
                c[node_id] = len(tree_induced_matching(host)) >= 2

    return NodeFlags(c=tuple(c), p=tuple(p), alpha=tuple(alpha))


class _Witnesses:
    """
    Forbidden subgraph extraction from a classified decomposition tree and its flags.
    """

    __slots__ = ("classes", "flags", "tree")

    def __init__(self, tree: MDTree, classes: dict[int, NodeClass], flags: NodeFlags) -> None:
        self.tree = tree
        self.classes = classes
        self.flags = flags

    def rep(self, node_id: int) -> int:
        return self.tree[node_id].rep

    def nonadjacent_pair(self, node_id: int) -> tuple[int, int]:
        """
        Returns two nonadjacent vertices of a P-node or N-node.
        """
        node = self.tree[node_id]
        if node.kind == "P":
            return self.rep(node.children[0]), self.rep(node.children[1])

        pi = node.quotient
        if pi is None:
            raise ValueError(f"Node {node_id} is complete.")

        k = pi.n
        i = next(v for v in pi.vertices() if pi.degree(v) < k - 1)
        j = next(u for u in pi.vertices() if u != i and not pi.has_edge(i, u))
        return self.rep(node.children[i]), self.rep(node.children[j])

    def c4(self, node_id: int) -> tuple[int, int, int, int]:
        """
        Returns an induced `C4` (in cycle order) of a node whose `C` flag is set.
        """
        tree, c = self.tree, self.flags.c
        while True:
            node = tree[node_id]
            child = next((k for k in node.children if c[k]), None)
            if child is None:
                break
            node_id = child

        if node.kind == "S":
            first, second = _non_leaf_children(tree, node_id)[:2]
            a, b = self.nonadjacent_pair(first)
            x, y = self.nonadjacent_pair(second)
            return a, x, b, y

        cls = self.classes[node_id]
        reps = [self.rep(k) for k in node.children]
        if cls.tag == "P5bar":
            v1, v2, _, v4, v5 = (reps[q] for q in cls.order)
            return v1, v4, v2, v5

        if cls.tag == "CoTreeLike":
            host, labels = expanded_host_tree(tree, node_id, "CoTreeLike")
            (a, b), (x, y) = tree_induced_matching(host)[:2]
            return labels[a], labels[x], labels[b], labels[y]

        spider = cls.spider
        fat = _fat_body_2k1(cls)
        if spider is None or fat is None:
            raise ValueError(f"Node {node_id} has no C4 of its own.")

        x, y = tree.vertices(node.children[fat])
        i = spider.body.index(fat)
        others = [j for j in range(spider.t) if j != i]
        if spider.kind == "starfish":
            return x, reps[spider.ends[i]], y, reps[spider.body[others[0]]]

        return x, reps[spider.ends[others[0]]], y, reps[spider.ends[others[1]]]

    def p6(self, node_id: int) -> list[int]:
        """
        Returns an induced `P6` (in path order) of a node whose `P` flag is set.
        """
        p = self.flags.p or ()
        tree = self.tree
        while tree[node_id].kind != "N":
            node_id = next(k for k in tree[node_id].children if p[k])

        host, labels = expanded_host_tree(tree, node_id, "TreeLike")
        return [labels[v] for v in tree_diameter_path(host)[:6]]

    def independent(self, node_id: int) -> list[int]:
        """
        Returns a maximum independent set of the subgraph of the node.
        """
        tree, alpha = self.tree, self.flags.alpha or ()
        result: list[int] = []
        stack = [node_id]
        while stack:
            node = tree[stack.pop()]
            if node.is_leaf:
                result.append(node.rep)
            elif node.kind == "P":
                stack.extend(node.children)
            elif node.kind == "S":
                stack.append(max(node.children, key=lambda k: alpha[k]))
            else:
                tag = self.classes[node.id].tag
                host, labels = expanded_host_tree(tree, node.id, tag)
                if tag == "TreeLike":
                    result.extend(labels[v] for v in tree_alpha(host))
                else:
                    u, v = next(host.edges())
                    result.extend((labels[u], labels[v]))

        return sorted(result)


def _describe(pattern: WitnessPattern, vertices: tuple[int, ...]) -> str:
    return f"induced {pattern} on vertices {list(vertices)}"


class _Rules(RuleSet[Witness]):
    """
    Base of the recognition rule sets. Every rule is applied to every node in post-order.
    """

    __slots__ = ("witnesses",)

    def __init__(self, witnesses: _Witnesses) -> None:
        self.witnesses = witnesses

    def _found(
        self, rule_id: str, node_id: int, pattern: WitnessPattern, vertices: tuple[int, ...]
    ) -> Witness:
        return Witness(
            rule=rule_id,
            node=node_id,
            pattern=pattern,
            vertices=vertices,
            description=_describe(pattern, vertices),
        )

    def _join_children(self, node_id: int) -> list[int]:
        w = self.witnesses
        return _non_leaf_children(w.tree, node_id) if w.tree[node_id].kind == "S" else []

    def _three_non_leaf(self, rule_id: str, node_id: int) -> Witness | None:
        kids = self._join_children(node_id)
        if len(kids) < 3:
            return None

        vertices = tuple(v for k in kids[:3] for v in self.witnesses.nonadjacent_pair(k))
        return self._found(rule_id, node_id, "3K2bar", vertices)

    def _two_non_leaf_c4(self, rule_id: str, node_id: int) -> Witness | None:
        w = self.witnesses
        kids = self._join_children(node_id)
        if len(kids) != 2:
            return None

        first, second = kids if w.flags.c[kids[0]] else kids[::-1]
        if not w.flags.c[first]:
            return None

        return self._found(rule_id, node_id, "3K2bar", (*w.c4(first), *w.nonadjacent_pair(second)))


class _P4TidyRules(_Rules):
    """
    Recognition rules of P4-tidy graphs.
    """

    __slots__ = ()

    @rule("a", "An N-node quotient is C5 or an urchin with at least three legs.")
    def prime_obstruction(self, node_id: int) -> Witness | None:
        w = self.witnesses
        cls = w.classes.get(node_id)
        if cls is None:
            return None

        reps = [w.rep(k) for k in w.tree[node_id].children]
        if cls.tag == "C5":
            return self._found("a", node_id, "C5", tuple(reps[q] for q in cls.order))

        spider = cls.spider
        if spider is not None and spider.kind == "urchin" and spider.t >= 3:
            inner = tuple(reps[spider.body[i]] for i in range(3))
            outer = tuple(reps[spider.ends[i]] for i in range(3))
            return self._found("a", node_id, "3sun", inner + outer)

        return None

    @rule("b", "A spider has a body vertex replaced by 2K1 and a head containing C4.")
    def fat_body_head(self, node_id: int) -> Witness | None:
        w = self.witnesses
        cls = w.classes.get(node_id)
        if cls is None or cls.spider is None or cls.spider.head is None:
            return None

        fat = _fat_body_2k1(cls)
        head = w.tree[node_id].children[cls.spider.head]
        if fat is None or not w.flags.c[head]:
            return None

        x, y = w.tree.vertices(w.tree[node_id].children[fat])
        return self._found("b", node_id, "3K2bar", (*w.c4(head), x, y))

    @rule("c", "An S-node has at least three non-leaf children.")
    def three_non_leaf(self, node_id: int) -> Witness | None:
        return self._three_non_leaf("c", node_id)

    @rule("d", "An S-node has two non-leaf children and one of them contains C4.")
    def two_non_leaf_c4(self, node_id: int) -> Witness | None:
        return self._two_non_leaf_c4("d", node_id)


class _TreeCographRules(_Rules):
    """
    Recognition rules of tree-cographs.
    """

    __slots__ = ()

    @rule("a", "An S-node has at least three non-leaf children.")
    def three_non_leaf(self, node_id: int) -> Witness | None:
        return self._three_non_leaf("a", node_id)

    @rule("b", "An S-node has two non-leaf children and one of them contains C4.")
    def two_non_leaf_c4(self, node_id: int) -> Witness | None:
        return self._two_non_leaf_c4("b", node_id)

    @rule("c", "An S-node has two non-leaf children, one contains P6, the other has independence number 3.")
    def path_and_triple(self, node_id: int) -> Witness | None:
        w = self.witnesses
        kids = self._join_children(node_id)
        if len(kids) != 2:
            return None

        p, alpha = w.flags.p or (), w.flags.alpha or ()
        for first, second in (kids, kids[::-1]):
            if p[first] and alpha[second] >= 3:
                vertices = (*w.p6(first), *w.independent(second)[:3])
                return self._found("c", node_id, "P6+3K1", vertices)

        return None

    @rule("d", "A co-tree-like N-node's complement tree has an induced matching of size 3.")
    def cotree_matching(self, node_id: int) -> Witness | None:
        w = self.witnesses
        cls = w.classes.get(node_id)
        if cls is None or cls.tag != "CoTreeLike":
            return None

        host, labels = expanded_host_tree(w.tree, node_id, "CoTreeLike")
        matching = tree_induced_matching(host)
        if len(matching) < 3:
            return None

        vertices = tuple(labels[v] for edge in matching[:3] for v in edge)
        return self._found("d", node_id, "3K2bar", vertices)


def _verdict(rules: RuleSet[Witness], tree: MDTree) -> NPVerdict:
    witness = rules.first_match(tree.post_order())
    if witness is None:
        return NPVerdict(perfect=True)

    logger.debug("Rule %s fired at node %d: %s", witness.rule, witness.node, witness.description)
    return NPVerdict(perfect=False, witness=witness)


def recognize_p4tidy(tree: MDTree, classes: dict[int, NodeClass] | None = None) -> NPVerdict:
    """
    Decides whether a P4-tidy graph is neighborhood-perfect.

    Raises:
        UnsupportedClassError: If the graph is not P4-tidy.
    """
    classes = p4tidy_classes(tree) if classes is None else classes
    flags = c4_flags(tree, classes)
    return _verdict(_P4TidyRules(_Witnesses(tree, classes, flags)), tree)


def recognize_treecograph(tree: MDTree, classes: dict[int, NodeClass] | None = None) -> NPVerdict:
    """
    Decides whether a tree-cograph is neighborhood-perfect.

    Raises:
        UnsupportedClassError: If the graph is not a tree-cograph.
    """
    classes = treecograph_classes(tree) if classes is None else classes
    flags = tc_flags(tree, classes)
    return _verdict(_TreeCographRules(_Witnesses(tree, classes, flags)), tree)


def classify(tree: MDTree) -> tuple[ClassTag, dict[int, NodeClass]]:
    """
    Returns the supported class of the decomposed graph (P4-tidy is preferred) and its node classes.

    Raises:
        UnsupportedClassError: If the graph is neither P4-tidy nor a tree-cograph.
    """
    try:
        return "P4Tidy", p4tidy_classes(tree)
    except UnsupportedClassError:
        pass

    try:
        return "TreeCograph", treecograph_classes(tree)
    except UnsupportedClassError as e:
        raise UnsupportedClassError("The graph is neither P4-tidy nor a tree-cograph.") from e


def recognize(graph: Graph, tree: MDTree | None = None) -> Recognition:
    """
    Decomposes and classifies the graph, then decides whether it is neighborhood-perfect.

    Arguments:
        graph: The graph to recognize.
        tree: The decomposition tree of the graph, if it is already available.

    Raises:
        UnsupportedClassError: If the graph is neither P4-tidy nor a tree-cograph.
    """
    tree = decompose(graph) if tree is None else tree
    class_tag, classes = classify(tree)
    if class_tag == "P4Tidy":
        verdict = recognize_p4tidy(tree, classes)
    else:
        verdict = recognize_treecograph(tree, classes)

    logger.debug("Recognized %s graph, perfect=%s", class_tag, verdict.perfect)
    return Recognition(class_tag=class_tag, verdict=verdict, tree=tree, classes=classes)
