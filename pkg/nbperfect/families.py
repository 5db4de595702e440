from __future__ import annotations

import logging
import random
from collections.abc import Callable
from typing import Any

from pydantic import TypeAdapter

from .graph import Graph, GraphError, complement, disjoint_union_all, from_edge_list, join_all
from .model.family import (
    CompleteSpec,
    CycleSpec,
    EdgelessSpec,
    FamilySpec,
    FatSpec,
    NamedGraph,
    NamedSpec,
    PathSpec,
    RandomP4TidySpec,
    RandomTreeCographSpec,
    RandomTreeSpec,
    StarfishSpec,
    SunSpec,
    UrchinSpec,
)

__all__ = (
    "complete",
    "cycle",
    "edgeless",
    "fatten",
    "generate",
    "named",
    "parse_family",
    "path",
    "random_p4tidy",
    "random_tree",
    "random_treecograph",
    "spider",
    "sun",
)

logger = logging.getLogger(__name__)

_family_adapter: TypeAdapter[FamilySpec] = TypeAdapter(FamilySpec)


def path(k: int) -> Graph:
    return from_edge_list(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    return from_edge_list(k, ((i, (i + 1) % k) for i in range(k)))


def complete(k: int) -> Graph:
    return from_edge_list(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def edgeless(k: int) -> Graph:
    return from_edge_list(k, ())


def sun(k: int, *, center: str = "clique") -> Graph:
    """
    Creates a `k`-sun: inner vertices `0..k-1`, outer vertex `k + i` adjacent to inner `i` and `i + 1`.

    Arguments:
        k: The number of inner vertices.
        center: `"clique"` or `"cycle"`, the graph the inner vertices induce.
    """
    inner = complete(k) if center == "clique" else cycle(k)
    edges = list(inner.edges())
    edges.extend((i, k + i) for i in range(k))
    edges.extend(((i + 1) % k, k + i) for i in range(k))
    return from_edge_list(2 * k, edges)


def spider(t: int, *, urchin: bool = False, head: Graph | None = None) -> Graph:
    """
    Creates a starfish or urchin with `t` legs.

    Vertex layout: ends `0..t-1`, body `t..2t-1`, then the head vertices. In a starfish end `i` is
    adjacent to body `t + i` only, in an urchin to every body vertex except `t + i`.
    """
    edges: list[tuple[int, int]] = []
    for i in range(t):
        for j in range(t):
            if (i == j) != urchin:
                edges.append((i, t + j))
            if i < j:
                edges.append((t + i, t + j))

    n = 2 * t
    if head is not None:
        edges.extend((n + u, n + v) for u, v in head.edges())
        edges.extend((t + i, n + r) for i in range(t) for r in range(head.n))
        n += head.n

    return from_edge_list(n, edges)


def fatten(graph: Graph, vertex: int, shape: str) -> Graph:
    """
    Replaces `vertex` by `K2` (`shape="K2"`) or `2K1`: its twin is appended as the last vertex.
    """
    twin = graph.n
    edges = list(graph.edges())
    edges.extend((u, twin) for u in graph.neighbors(vertex))
    if shape == "K2":
        edges.append((vertex, twin))

    return from_edge_list(graph.n + 1, edges)


def named(name: NamedGraph) -> Graph:
    """
    Creates one of the named graphs.
    """
    if name == "3K2bar":
        return complement(from_edge_list(6, [(0, 1), (2, 3), (4, 5)]))
    if name == "C6+3K1":
        return join_all([cycle(6), edgeless(3)])
    if name == "P6+3K1":
        return join_all([path(6), edgeless(3)])
    if name == "3sun":
        return sun(3)
    if name == "P5bar":
        return complement(path(5))

    # Petersen graph: outer 5-cycle, inner pentagram and spokes.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges.extend((5 + i, 5 + (i + 2) % 5) for i in range(5))
    edges.extend((i, 5 + i) for i in range(5))
    return from_edge_list(10, edges)


def random_tree(n: int, seed: int) -> Graph:
    """
    Creates a random tree: every vertex attaches to a uniformly chosen earlier one, then labels
    are shuffled.
    """
    rng = random.Random(seed)
    return _tree_on(rng, list(range(n)), n)


def _tree_on(rng: random.Random, vertices: list[int], n: int) -> Graph:
    labels = list(vertices)
    rng.shuffle(labels)
    return from_edge_list(n, ((labels[i], labels[rng.randrange(i)]) for i in range(1, len(labels))))


def _split(rng: random.Random, vertices: list[int]) -> list[list[int]]:
    """
    Splits the vertex list into 2 to 4 nonempty consecutive pieces.
    """
    k = len(vertices)
    cuts = sorted(rng.sample(range(1, k), rng.randint(1, min(k, 4) - 1)))
    bounds = [0, *cuts, k]
    return [vertices[a:b] for a, b in zip(bounds, bounds[1:], strict=False)]


def _join_pieces(edges: list[tuple[int, int]], pieces: list[list[int]]) -> None:
    for i, first in enumerate(pieces):
        for second in pieces[i + 1 :]:
            edges.extend((u, v) for u in first for v in second)


_prime_shapes: dict[str, list[tuple[int, int]]] = {
    "C5": [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
    "P5": [(0, 1), (1, 2), (2, 3), (3, 4)],
    "P5bar": [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)],
}


def _p4tidy_prime(
    rng: random.Random, vertices: list[int], edges: list[tuple[int, int]], tasks: list[list[int]]
) -> None:
    """
    Adds the edges of a random P4-tidy prime node on `vertices` and schedules its head.
    """
    k = len(vertices)
    if k == 5 and rng.random() < 0.5:
        shape = _prime_shapes[rng.choice(sorted(_prime_shapes))]
        edges.extend((vertices[a], vertices[b]) for a, b in shape)
        return

    t = rng.randint(2, min(4, k // 2))
    fat = 2 * t < k and rng.random() < 0.3
    urchin = t >= 3 and rng.random() < 0.5
    ends, body = vertices[:t], vertices[t : 2 * t]
    rest = vertices[2 * t :]
    twin = rest.pop(0) if fat else None
    head = rest

    local: list[tuple[int, int]] = []
    for i in range(t):
        for j in range(t):
            if (i == j) != urchin:
                local.append((ends[i], body[j]))
            if i < j:
                local.append((body[i], body[j]))
    local.extend((c, r) for c in body for r in head)

    if twin is not None:
        original = rng.choice(ends + body)
        copied = [(twin, v if u == original else u) for u, v in local if original in (u, v)]
        local.extend(copied)
        if rng.random() < 0.5:
            local.append((original, twin))

    edges.extend(local)
    if len(head) > 1:
        tasks.append(head)


def random_p4tidy(n: int, seed: int, *, dense_limit: int = 16) -> Graph:
    """
    Creates a random P4-tidy graph by expanding a random decomposition shape top-down.

    Arguments:
        n: The number of vertices.
        seed: Random seed.
        dense_limit: Only modules with at most this many vertices are joined to each other.
    """
    rng = random.Random(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    edges: list[tuple[int, int]] = []
    tasks = [labels]
    while tasks:
        vertices = tasks.pop()
        k = len(vertices)
        if k == 1:
            continue

        roll = rng.random()
        if k >= 4 and roll < 0.5:
            _p4tidy_prime(rng, vertices, edges, tasks)
            continue

        pieces = _split(rng, vertices)
        if k <= dense_limit and roll < 0.75:
            _join_pieces(edges, pieces)
        tasks.extend(pieces)

    return from_edge_list(n, edges)


def random_treecograph(n: int, seed: int, *, dense_limit: int = 16) -> Graph:
    """
    Creates a random tree-cograph from random trees, complements of random trees, unions and joins.

    Arguments:
        n: The number of vertices.
        seed: Random seed.
        dense_limit: Only modules with at most this many vertices are joined or complemented.
    """
    rng = random.Random(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    edges: list[tuple[int, int]] = []
    tasks = [labels]
    while tasks:
        vertices = tasks.pop()
        k = len(vertices)
        if k == 1:
            continue

        small = k <= dense_limit
        roll = rng.random()
        if roll < 0.35:
            tree = _tree_on(rng, list(range(k)), k)
            edges.extend((vertices[u], vertices[v]) for u, v in tree.edges())
        elif small and k >= 4 and roll < 0.5:
            cotree = complement(_tree_on(rng, list(range(k)), k))
            edges.extend((vertices[u], vertices[v]) for u, v in cotree.edges())
        else:
            pieces = _split(rng, vertices)
            if small and roll >= 0.75:
                _join_pieces(edges, pieces)
            tasks.extend(pieces)

    return from_edge_list(n, edges)


def _generate_spider(spec: StarfishSpec | UrchinSpec) -> Graph:
    head = None if spec.head is None else generate(spec.head)
    return spider(spec.t, urchin=isinstance(spec, UrchinSpec), head=head)


def _generate_fat(spec: FatSpec) -> Graph:
    if spec.index >= spec.base.t:
        raise GraphError(f"Leg index {spec.index} out of range for t={spec.base.t}.")

    vertex = spec.index if spec.role == "end" else spec.base.t + spec.index
    return fatten(_generate_spider(spec.base), vertex, spec.shape)


_generators: dict[type[Any], Callable[[Any], Graph]] = {
    PathSpec: lambda s: path(s.k),
    CycleSpec: lambda s: cycle(s.k),
    CompleteSpec: lambda s: complete(s.k),
    EdgelessSpec: lambda s: edgeless(s.k),
    SunSpec: lambda s: sun(s.k, center=s.center),
    StarfishSpec: _generate_spider,
    UrchinSpec: _generate_spider,
    FatSpec: _generate_fat,
    NamedSpec: lambda s: named(s.name),
    RandomTreeSpec: lambda s: random_tree(s.n, s.seed),
    RandomP4TidySpec: lambda s: random_p4tidy(s.n, s.seed, dense_limit=s.dense_limit),
    RandomTreeCographSpec: lambda s: random_treecograph(s.n, s.seed, dense_limit=s.dense_limit),
}


def generate(spec: FamilySpec) -> Graph:
    """
    Creates the graph described by the given family specification.

    Raises:
        GraphError: If the parameters do not describe a graph of the family.
    """
    graph = _generators[type(spec)](spec)
    logger.debug("Generated %s graph with n=%d, m=%d", spec.family, graph.n, graph.m)
    return graph


_shorthand_fields: dict[str, str] = {
    "path": "k",
    "cycle": "k",
    "complete": "k",
    "edgeless": "k",
    "sun": "k",
    "starfish": "t",
    "urchin": "t",
    "named": "name",
    "random_tree": "n",
    "random_p4tidy": "n",
    "random_treecograph": "n",
}


def parse_family(text: str, *, seed: int | None = None) -> FamilySpec:
    """
    Parses a family specification.

    Accepts a JSON document (`{"family": "starfish", "t": 3}`) or the `<family>:<value>` shorthand
    (`starfish:3`, `named:3K2bar`, `random_tree:50`). `seed` is added to random families.

    Raises:
        pydantic.ValidationError: If the specification is invalid.
    """
    text = text.strip()
    if text.startswith("{"):
        return _family_adapter.validate_json(text)

    family, _, value = text.partition(":")
    data: dict[str, Any] = {"family": family}
    key = _shorthand_fields.get(family)
    if key is not None and value:
        data[key] = value
    if family.startswith("random_") and seed is not None:
        data["seed"] = seed

    return _family_adapter.validate_python(data)
