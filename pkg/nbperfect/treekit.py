"""
Linear-time subroutines on trees and forests.

All dynamic programs root every component at its smallest vertex and run iteratively over the
breadth-first order (reversed for leaf-to-root passes).
"""

from __future__ import annotations

import logging
from collections import deque

from .graph import Graph, complement, components, induced
from .typing import EdgeTuple

__all__ = (
    "TreeError",
    "complement_ni_pair",
    "cotree_ni_pair",
    "total_dom_pair",
    "tree_alpha",
    "tree_alpha2",
    "tree_diameter_path",
    "tree_domination",
    "tree_induced_matching",
    "tree_longest_path",
    "tree_matching_cover",
)

logger = logging.getLogger(__name__)

_NEG = -(1 << 40)
_INF = 1 << 40


class TreeError(Exception):
    """Raised when the input of a tree routine is not a tree (or forest)."""


def _edge(u: int, v: int) -> EdgeTuple:
    return (u, v) if u < v else (v, u)


def _rooted(forest: Graph) -> tuple[list[int], list[int]]:
    """
    Returns the breadth-first order and the parent array of the forest.

    Raises:
        TreeError: If the graph has a cycle.
    """
    n = forest.n
    parent = [-1] * n
    seen = [False] * n
    order: list[int] = []
    for root in range(n):
        if seen[root]:
            continue

        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in forest.neighbors(v):
                if u == parent[v]:
                    continue
                if seen[u]:
                    raise TreeError("The graph has a cycle.")
                seen[u] = True
                parent[u] = v
                queue.append(u)

    return order, parent


def _children(order: list[int], parent: list[int]) -> list[list[int]]:
    children: list[list[int]] = [[] for _ in parent]
    for v in order:
        if parent[v] >= 0:
            children[parent[v]].append(v)
    return children


def tree_matching_cover(forest: Graph) -> tuple[list[EdgeTuple], list[int]]:
    """
    Computes a maximum matching and a minimum vertex cover of a forest.

    Both are greedy leaf-to-root passes: a vertex is matched to its parent when both are free,
    and a parent joins the cover when the edge to an uncovered child is uncovered.

    Returns:
        The matching and the sorted vertex cover, of equal size.

    Raises:
        TreeError: If the graph has a cycle.
    """
    order, parent = _rooted(forest)
    matched = [False] * forest.n
    in_cover = [False] * forest.n
    matching: list[EdgeTuple] = []
    for v in reversed(order):
        p = parent[v]
        if p < 0:
            continue
        if not matched[v] and not matched[p]:
            matched[v] = matched[p] = True
            matching.append(_edge(v, p))
        if not in_cover[v] and not in_cover[p]:
            in_cover[p] = True

    matching.sort()
    return matching, [v for v in range(forest.n) if in_cover[v]]


def tree_alpha(forest: Graph) -> list[int]:
    """
    Returns a maximum independent set of a forest.

    Raises:
        TreeError: If the graph has a cycle.
    """
    order, parent = _rooted(forest)
    children = _children(order, parent)
    take = [1] * forest.n
    skip = [0] * forest.n
    for v in reversed(order):
        for c in children[v]:
            take[v] += skip[c]
            skip[v] += max(take[c], skip[c])

    chosen = [False] * forest.n
    for v in order:
        p = parent[v]
        if p >= 0 and chosen[p]:
            continue
        chosen[v] = take[v] >= skip[v]

    return [v for v in range(forest.n) if chosen[v]]


def tree_domination(forest: Graph) -> list[int]:
    """
    Returns a minimum dominating set of a forest.

    Vertex states: `0` in the set, `1` outside but dominated by a child, `2` outside and
    left for the parent to dominate.

    Raises:
        TreeError: If the graph has a cycle.
    """
    order, parent = _rooted(forest)
    children = _children(order, parent)
    n = forest.n
    cost = [[1, _INF, 0] for _ in range(n)]
    forced: list[int] = [-1] * n
    needs_force = [False] * n
    for v in reversed(order):
        kids = children[v]
        if not kids:
            continue

        cost[v][0] = 1 + sum(min(cost[c]) for c in kids)
        cost[v][2] = sum(cost[c][1] for c in kids)
        cost[v][2] = min(cost[v][2], _INF)
        base = sum(min(cost[c][0], cost[c][1]) for c in kids)
        extra, best = min((cost[c][0] - min(cost[c][0], cost[c][1]), c) for c in kids)
        cost[v][1] = min(base + extra, _INF)
        forced[v] = best
        needs_force[v] = all(cost[c][0] > cost[c][1] for c in kids)

    state = [0] * n
    for v in order:
        p = parent[v]
        if p < 0:
            state[v] = 0 if cost[v][0] <= cost[v][1] else 1
            continue

        ps = state[p]
        if ps == 0:
            state[v] = min(range(3), key=cost[v].__getitem__)
        elif ps == 2:
            state[v] = 1
        elif v == forced[p] and needs_force[p]:
            state[v] = 0
        else:
            state[v] = 0 if cost[v][0] <= cost[v][1] else 1

    return [v for v in range(n) if state[v] == 0]


def tree_alpha2(forest: Graph) -> list[int]:
    """
    Returns a maximum 2-independent set (vertices pairwise at distance at least 3) of a forest.

    The state of a vertex is the distance from it to the nearest selected vertex of its subtree,
    capped at 2: `0` (selected), `1` (a child is selected) or `2` (farther or none).
    A selected vertex needs every child in state `2`, and at most one child of an unselected
    vertex may be selected, since two selected children are at distance 2.

    Raises:
        TreeError: If the graph has a cycle.
    """
    order, parent = _rooted(forest)
    children = _children(order, parent)
    n = forest.n
    value = [[1, _NEG, 0] for _ in range(n)]
    pick: list[int] = [-1] * n
    for v in reversed(order):
        kids = children[v]
        if not kids:
            continue

        value[v][0] = 1 + sum(value[c][2] for c in kids)
        rest = sum(max(value[c][1], value[c][2]) for c in kids)
        value[v][2] = rest
        gain, best = max((value[c][0] - max(value[c][1], value[c][2]), -c) for c in kids)
        value[v][1] = rest + gain
        pick[v] = -best

    state = [0] * n
    for v in order:
        p = parent[v]
        if p < 0:
            state[v] = max(range(3), key=value[v].__getitem__)
        elif state[p] == 0:
            state[v] = 2
        elif state[p] == 1 and pick[p] == v:
            state[v] = 0
        else:
            state[v] = 1 if value[v][1] > value[v][2] else 2

    return [v for v in range(n) if state[v] == 0]


def _farthest(tree: Graph, start: int) -> tuple[int, list[int]]:
    parent = [-1] * tree.n
    parent[start] = start
    queue = deque([start])
    last = start
    while queue:
        last = queue.popleft()
        for u in tree.neighbors(last):
            if parent[u] < 0:
                parent[u] = last
                queue.append(u)

    return last, parent


def tree_diameter_path(tree: Graph) -> list[int]:
    """
    Returns a longest path of a tree (double breadth-first sweep).

    Raises:
        TreeError: If the graph is not a tree.
    """
    if tree.n == 0 or tree.m != tree.n - 1 or len(components(tree)) != 1:
        raise TreeError("The graph is not a tree.")

    a, _ = _farthest(tree, 0)
    b, parent = _farthest(tree, a)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])

    return path


def tree_longest_path(tree: Graph) -> int:
    """
    Returns the number of vertices on a longest path of a tree.

    Raises:
        TreeError: If the graph is not a tree.
    """
    return len(tree_diameter_path(tree))


def tree_induced_matching(forest: Graph) -> list[EdgeTuple]:
    """
    Returns a maximum induced matching of a forest (no edge of the forest joins two matching edges).

    Vertex states: `out` (unmatched), `down` (matched to a child) and `up` (matched to the parent).

    Raises:
        TreeError: If the graph has a cycle.
    """
    order, parent = _rooted(forest)
    children = _children(order, parent)
    n = forest.n
    out, down, up = [0] * n, [_NEG] * n, [0] * n
    partner = [-1] * n
    for v in reversed(order):
        kids = children[v]
        if not kids:
            continue

        up[v] = sum(out[c] for c in kids)
        out[v] = sum(max(out[c], down[c]) for c in kids)
        gain, best = max((up[c] - out[c], -c) for c in kids)
        down[v] = 1 + up[v] + gain
        partner[v] = -best

    state = ["out"] * n
    for v in order:
        p = parent[v]
        if p < 0:
            state[v] = "down" if down[v] > out[v] else "out"
        elif state[p] == "down" and partner[p] == v:
            state[v] = "up"
        elif state[p] == "out":
            state[v] = "down" if down[v] > out[v] else "out"
        else:
            state[v] = "out"

    return sorted(_edge(v, partner[v]) for v in range(n) if state[v] == "down")


def total_dom_pair(tree: Graph) -> EdgeTuple | None:
    """
    Returns a pair `(x, y)` with `N(x) | N(y) = V`, or `None` if there is no such pair.

    Every vertex of a total dominating pair is dominated by the other, so the pair is an edge.
    Adjacent vertices of a tree have no common neighbor, so the pair dominates everything
    exactly if its degrees sum to `n`. The first such edge in lexicographic order is returned.

    Raises:
        TreeError: If the graph is not a tree or has less than two vertices.
    """
    if tree.n < 2:
        raise TreeError("Total domination needs at least two vertices.")
    if tree.m != tree.n - 1:
        raise TreeError("The graph is not a tree.")

    for u, v in tree.edges():
        if tree.degree(u) + tree.degree(v) == tree.n:
            return (u, v)

    return None


def complement_ni_pair(tree: Graph) -> tuple[EdgeTuple, EdgeTuple] | None:
    """
    Returns two neighborhood-independent edges of the complement of the given tree, or `None`
    if the complement has no neighborhood-independent set of size 2.

    The pair exists exactly if the tree without its leaves is a path on 2 to 6 vertices, and in
    the 5 and 6 vertex cases no central path vertex has a leaf neighbor. The returned edges
    split a total dominating 4-set of the tree into two non-edges.

    Stars are not handled: their complement is disconnected, and `None` is returned.

    Raises:
        TreeError: If the graph is not a tree.
    """
    if tree.m != tree.n - 1 or len(components(tree)) != 1:
        raise TreeError("The graph is not a tree.")

    inner = [v for v in tree.vertices() if tree.degree(v) > 1]
    k = len(inner)
    if not 2 <= k <= 6:
        return None

    core, labels = induced(tree, inner)
    if any(core.degree(v) > 2 for v in core.vertices()):
        return None

    start = min(v for v in core.vertices() if core.degree(v) == 1)
    path, previous = [start], -1
    while len(path) < k:
        step = next(u for u in core.neighbors(path[-1]) if u != previous)
        previous = path[-1]
        path.append(step)

    p = [labels[i] for i in path]

    def leaf_at(v: int) -> int:
        return min(u for u in tree.neighbors(v) if tree.degree(u) == 1)

    if k >= 5 and any(tree.degree(u) == 1 for c in p[2 : k - 2] for u in tree.neighbors(c)):
        return None

    if k == 2:
        pair = (_edge(leaf_at(p[0]), p[1]), _edge(p[0], leaf_at(p[1])))
    elif k == 3:
        pair = (_edge(p[0], p[2]), _edge(p[1], leaf_at(p[0])))
    elif k == 4:
        pair = (_edge(p[0], p[2]), _edge(p[1], p[3]))
    else:
        pair = (_edge(p[0], p[k - 2]), _edge(p[1], p[k - 1]))

    return pair


def cotree_ni_pair(graph: Graph) -> tuple[EdgeTuple, EdgeTuple] | None:
    """
    Returns two neighborhood-independent edges of a graph whose complement is a tree,
    or `None` if its neighborhood independence number is 1.

    Raises:
        TreeError: If the complement of the graph is not a tree.
    """
    return complement_ni_pair(complement(graph))
