"""
Batch drivers: oracle-equivalence sweeps and the running time benchmark.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .decomposition import decompose, materialize
from .families import cycle, generate, named, path
from .graph import Graph, from_edge_list, induced, to_networkx
from .model.family import RandomP4TidySpec, RandomTreeCographSpec, RandomTreeSpec
from .optimal import optimal_lists
from .oracle import (
    brute_is_np,
    brute_param,
    contains_induced,
    is_p4_tidy_by_definition,
    is_tree_cograph_by_definition,
)
from .recognition import UnsupportedClassError, Witness, c4_flags, classify, recognize, tc_flags
from .structure import is_p4_tidy, is_tree_cograph
from .typing import BenchConfig, SweepConfig, _default_bench_config, _default_sweep_config
from .validator import check_lists

__all__ = (
    "BenchStep",
    "SweepReport",
    "check_graph",
    "iter_labeled_graphs",
    "run_bench",
    "run_sweep",
)

logger = logging.getLogger(__name__)

_patterns: dict[str, Graph] = {
    "3K2bar": named("3K2bar"),
    "3sun": named("3sun"),
    "C5": cycle(5),
    "P6+3K1": named("P6+3K1"),
}


def _witness_problems(graph: Graph, witness: Witness) -> list[str]:
    if len(set(witness.vertices)) != len(witness.vertices):
        return [f"witness of rule {witness.rule} repeats vertices"]

    sub, _ = induced(graph, witness.vertices)
    if not nx.is_isomorphic(to_networkx(sub), to_networkx(_patterns[witness.pattern])):
        return [f"witness of rule {witness.rule} does not induce {witness.pattern}"]
    return []


def check_graph(graph: Graph, config: SweepConfig | None = None) -> list[str]:
    """
    Compares every algorithm of the package with its oracle on a small graph.

    Graphs outside the supported classes are only checked for class membership.

    Arguments:
        graph: The graph, small enough for the oracles.
        config: Sweep configuration.

    Returns:
        The description of every mismatch.
    """
    config = config or {}
    compare_lists = config.get("check_lists", _default_sweep_config.check_lists)
    check_flags = config.get("check_flags", _default_sweep_config.check_flags)

    tree = decompose(graph)
    problems: list[str] = []
    if is_p4_tidy(tree) != is_p4_tidy_by_definition(graph):
        problems.append("P4-tidy classification differs from the definition")
    if is_tree_cograph(tree) != is_tree_cograph_by_definition(graph):
        problems.append("tree-cograph classification differs from the definition")

    try:
        recognition = recognize(graph, tree)
    except UnsupportedClassError:
        return problems

    verdict = recognition.verdict
    if verdict.perfect != brute_is_np(graph):
        problems.append(f"verdict perfect={verdict.perfect} differs from the oracle")
    if verdict.witness is not None:
        problems.extend(_witness_problems(graph, verdict.witness))

    if compare_lists:
        lists = optimal_lists(graph, tree, recognition.classes)
        problems.extend(check_lists(graph, lists))
        for kind, items in (("pn", lists.rn), ("an", lists.an), ("a2", lists.a2), ("gamma", lists.d)):
            expected, _ = brute_param(graph, kind)
            if len(items) != expected:
                problems.append(f"{kind} = {len(items)} differs from the oracle value {expected}")

    if check_flags:
        c4, p6 = cycle(4), path(6)
        if recognition.class_tag == "P4Tidy":
            flags = c4_flags(tree, recognition.classes)
        else:
            flags = tc_flags(tree, recognition.classes)
        for node in tree.nodes:
            sub, _ = materialize(tree, node.id)
            if flags.c[node.id] != (contains_induced(sub, c4) is not None):
                problems.append(f"C4 flag of node {node.id} differs from the oracle")
            if flags.p is not None and flags.p[node.id] != (contains_induced(sub, p6) is not None):
                problems.append(f"P6 flag of node {node.id} differs from the oracle")
            if flags.alpha is not None and flags.alpha[node.id] != brute_param(sub, "alpha")[0]:
                problems.append(f"independence number of node {node.id} differs from the oracle")

    return problems


def iter_labeled_graphs(n: int) -> Iterator[Graph]:
    """
    Yields every labeled graph on `n` vertices, ordered by the bitmask of their edge set.
    """
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield _graph_of_mask(n, pairs, mask)


def _graph_of_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    return from_edge_list(n, (pair for i, pair in enumerate(pairs) if mask >> i & 1))


@dataclass(kw_only=True, slots=True)
class SweepReport:
    """
    Result of `run_sweep()`.
    """

    n: int
    checked: int = 0
    supported: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return len(self.mismatches) == 0


def _sweep_chunk(n: int, start: int, stop: int, config: SweepConfig) -> tuple[int, list[str]]:
    """
    Checks the graphs with edge bitmasks in `[start, stop)`.

    Returns:
        The number of supported graphs and the mismatches.
    """
    pairs = list(combinations(range(n), 2))
    supported = 0
    mismatches: list[str] = []
    for mask in range(start, stop):
        graph = _graph_of_mask(n, pairs, mask)
        tree = decompose(graph)
        try:
            classify(tree)
        except UnsupportedClassError:
            pass
        else:
            supported += 1
        mismatches.extend(f"graph {mask}: {problem}" for problem in check_graph(graph, config))

    return supported, mismatches


def run_sweep(n: int, *, workers: int = 1, config: SweepConfig | None = None) -> SweepReport:
    """
    Checks every labeled graph on `n` vertices with `check_graph()`.

    Arguments:
        n: The number of vertices.
        workers: The number of worker processes. With 1 everything runs in the calling process.
        config: Sweep configuration.
    """
    config = config or {}
    total = 1 << (n * (n - 1) // 2)
    report = SweepReport(n=n, checked=total)
    if workers <= 1:
        report.supported, report.mismatches = _sweep_chunk(n, 0, total, config)
    else:
        chunk = max(1, total // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_sweep_chunk, n, start, min(start + chunk, total), config)
                for start in range(0, total, chunk)
            ]
            for future in as_completed(futures):
                supported, mismatches = future.result()
                report.supported += supported
                report.mismatches.extend(mismatches)

    report.mismatches.sort()
    logger.info(
        "Swept %d graphs on %d vertices: %d supported, %d mismatches",
        total,
        n,
        report.supported,
        len(report.mismatches),
    )
    return report


@dataclass(frozen=True, kw_only=True, slots=True)
class BenchStep:
    """
    Timings of one benchmark instance, in microseconds.
    """

    n: int
    m: int
    decompose_us: int
    recognize_us: int
    sets_us: int
    ratio: float | None = None
    """The recognize and sets time relative to the previous step."""


def _elapsed_us(start: float) -> int:
    return int((time.perf_counter() - start) * 1_000_000)


def _bench_step(config: BenchConfig, n: int) -> BenchStep:
    family = config.get("family", _default_bench_config.family)
    seed = config.get("seed", _default_bench_config.seed)
    dense_limit = config.get("dense_limit", _default_bench_config.dense_limit)
    if family == "random_tree":
        graph = generate(RandomTreeSpec(n=n, seed=seed))
    elif family == "random_p4tidy":
        graph = generate(RandomP4TidySpec(n=n, seed=seed, dense_limit=dense_limit))
    else:
        graph = generate(RandomTreeCographSpec(n=n, seed=seed, dense_limit=dense_limit))

    start = time.perf_counter()
    tree = decompose(graph)
    decompose_us = _elapsed_us(start)

    start = time.perf_counter()
    recognition = recognize(graph, tree)
    recognize_us = _elapsed_us(start)

    start = time.perf_counter()
    optimal_lists(graph, tree, recognition.classes)
    sets_us = _elapsed_us(start)

    return BenchStep(
        n=graph.n, m=graph.m, decompose_us=decompose_us, recognize_us=recognize_us, sets_us=sets_us
    )


def run_bench(config: BenchConfig | None = None, *, workers: int = 1) -> list[BenchStep]:
    """
    Times decomposition, recognition and the certificate lists on random instances whose size
    doubles from step to step.

    Arguments:
        config: Benchmark configuration.
        workers: The number of worker processes, each step runs in one of them.
    """
    config = config or {}
    start = config.get("start", _default_bench_config.start)
    steps = config.get("steps", _default_bench_config.steps)
    sizes = [start << i for i in range(steps)]

    if workers <= 1:
        results = [_bench_step(config, n) for n in sizes]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_bench_step, [config] * len(sizes), sizes))

    timed: list[BenchStep] = []
    previous: BenchStep | None = None
    for step in results:
        ratio = None
        if previous is not None:
            before = previous.recognize_us + previous.sets_us
            ratio = (step.recognize_us + step.sets_us) / max(before, 1)
        timed.append(
            BenchStep(
                n=step.n,
                m=step.m,
                decompose_us=step.decompose_us,
                recognize_us=step.recognize_us,
                sets_us=step.sets_us,
                ratio=ratio,
            )
        )
        previous = step
        logger.debug("Bench step n=%d: %s", step.n, step)

    return timed
