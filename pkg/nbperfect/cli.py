"""
Command-line interface.

Exit codes: `0` success, `1` the graph is neither P4-tidy nor a tree-cograph, `2` invalid input
or refused oracle computation, `3` the self-test found mismatches.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from functools import wraps
from typing import IO, Any, TypeVar, get_args

import click
from pydantic import ValidationError

from .decomposition import DecompositionError, decompose
from .families import generate, parse_family
from .graph import Graph, GraphError, format_text, parse_text
from .hardness import ReductionError, reduce_alpha_to_an, reduce_vc_to_pn
from .model import GraphModel, RunReport, VerdictModel
from .optimal import format_lists, optimal_lists
from .oracle import SizeGuardError, brute_is_mnnp, brute_is_np, brute_is_strongly_np, brute_param
from .recognition import UnsupportedClassError, recognize
from .sweep import run_bench, run_sweep
from .typing import BenchConfig, BenchFamily, GraphFormat, OracleConfig, ParamKind, PredicateKind

__all__ = (
    "cli",
    "main",
)

logger = logging.getLogger(__name__)

TFunc = TypeVar("TFunc", bound=Callable[..., Any])

_class_names = {"P4Tidy": "P4-tidy", "TreeCograph": "tree-cograph"}

_input_errors: tuple[type[Exception], ...] = (
    DecompositionError,
    GraphError,
    ReductionError,
    SizeGuardError,
    ValidationError,
)


class _ExitError(click.ClickException):
    """Error message with a custom exit code."""

    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


class _Group(click.Group):
    """
    Command group that maps domain errors to exit codes instead of tracebacks.
    """

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except UnsupportedClassError as e:
            raise _ExitError(str(e), 1) from e
        except _input_errors as e:
            raise _ExitError(str(e), 2) from e


def _graph_input(func: TFunc) -> TFunc:
    """
    Decorator that adds the graph input options to a command and passes the loaded graph
    and a description of the input to it as `graph` and `source`.
    """

    @click.option("--in", "stream", type=click.File("r"), help="Graph file, '-' for standard input.")
    @click.option("--family", "family", help="Family specification, e.g. 'starfish:4' or JSON.")
    @click.option("--seed", type=click.IntRange(min=0), help="Seed of random families.")
    @click.option(
        "--format", "fmt", type=click.Choice(get_args(GraphFormat)), default="edge", show_default=True
    )
    @wraps(func)
    def wrapper(
        stream: IO[str] | None, family: str | None, seed: int | None, fmt: GraphFormat, **kwargs: Any
    ) -> Any:
        if stream is not None and family is not None:
            raise click.UsageError("--in and --family are mutually exclusive.")

        if family is not None:
            graph, source = generate(parse_family(family, seed=seed)), family
        elif stream is not None:
            graph, source = _read_graph(stream.read(), fmt), stream.name
        else:
            raise click.UsageError("One of --in and --family is required.")

        return func(graph=graph, source=source, **kwargs)

    return wrapper  # type: ignore[return-value]


def _read_graph(text: str, fmt: GraphFormat) -> Graph:
    if fmt == "json":
        return GraphModel.model_validate_json(text).to_graph()
    return parse_text(text)


def _write_graph(graph: Graph, fmt: GraphFormat, comments: tuple[str, ...] = ()) -> None:
    if fmt == "json":
        click.echo(GraphModel.from_graph(graph).model_dump_json())
    else:
        click.echo(format_text(graph, comments), nl=False)


def _elapsed_us(start: float) -> int:
    return int((time.perf_counter() - start) * 1_000_000)


def _emit_report(report: RunReport) -> None:
    click.echo(report.model_dump_json(indent=2))


@click.group(cls=_Group)
@click.option("-v", "--verbose", count=True, help="Increase log verbosity (repeatable).")
def cli(verbose: int) -> None:
    """
    Neighborhood-perfect graph recognition and optimal sets for P4-tidy graphs and tree-cographs.
    """
    level = max(logging.DEBUG, logging.WARNING - 10 * verbose)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@cli.command("recognize")
@_graph_input
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
def recognize_command(graph: Graph, source: str, as_json: bool) -> None:
    """
    Decide whether the graph is neighborhood-perfect and print a witness if it is not.
    """
    start = time.perf_counter()
    tree = decompose(graph)
    decompose_us = _elapsed_us(start)

    start = time.perf_counter()
    result = recognize(graph, tree)
    recognize_us = _elapsed_us(start)

    verdict, witness = result.verdict, result.verdict.witness
    if as_json:
        model = VerdictModel(perfect=verdict.perfect)
        if witness is not None:
            model = VerdictModel(
                perfect=False,
                rule=witness.rule,
                node=witness.node,
                description=witness.description,
                witness=list(witness.vertices),
            )
        _emit_report(
            RunReport(
                input=source,
                class_tag=result.class_tag,
                verdict=model,
                timing={"decompose": decompose_us, "recognize": recognize_us},
            )
        )
        return

    name = _class_names[result.class_tag]
    if witness is None:
        click.echo(f"{name}, neighborhood-perfect")
    else:
        click.echo(
            f"{name}, not neighborhood-perfect, witness {witness.pattern} {list(witness.vertices)} "
            f"(rule {witness.rule} at node {witness.node})"
        )


def _lists_report(graph: Graph, source: str) -> RunReport:
    start = time.perf_counter()
    tree = decompose(graph)
    decompose_us = _elapsed_us(start)

    start = time.perf_counter()
    result = recognize(graph, tree)
    recognize_us = _elapsed_us(start)

    start = time.perf_counter()
    lists = optimal_lists(graph, tree, result.classes)
    sets_us = _elapsed_us(start)

    return RunReport(
        input=source,
        class_tag=result.class_tag,
        verdict=VerdictModel(perfect=result.verdict.perfect),
        params={"pn": len(lists.rn), "an": len(lists.an), "a2": len(lists.a2), "gamma": len(lists.d)},
        certificates={
            "A_n": list(lists.an),
            "R_n": list(lists.rn),
            "A_2": list(lists.a2),
            "D": list(lists.d),
        },
        timing={"decompose": decompose_us, "recognize": recognize_us, "sets": sets_us},
    )


@cli.command("sets")
@_graph_input
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
def sets_command(graph: Graph, source: str, as_json: bool) -> None:
    """
    Print optimal neighborhood-independent, neighborhood-covering, 2-independent and dominating sets.
    """
    if as_json:
        _emit_report(_lists_report(graph, source))
    else:
        click.echo(format_lists(optimal_lists(graph)), nl=False)


@cli.command("params")
@_graph_input
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
def params_command(graph: Graph, source: str, as_json: bool) -> None:
    """
    Print the neighborhood covering, neighborhood independence, 2-independence and domination numbers.
    """
    report = _lists_report(graph, source)
    if as_json:
        _emit_report(report.model_copy(update={"certificates": {}}))
        return

    for name, value in report.params.items():
        click.echo(f"{name} {value}")


@cli.command("generate")
@click.option("--family", "family", required=True, help="Family specification, e.g. 'urchin:4' or JSON.")
@click.option("--seed", type=click.IntRange(min=0), help="Seed of random families.")
@click.option(
    "--format", "fmt", type=click.Choice(get_args(GraphFormat)), default="edge", show_default=True
)
def generate_command(family: str, seed: int | None, fmt: GraphFormat) -> None:
    """
    Print a graph of the given family.
    """
    spec = parse_family(family, seed=seed)
    _write_graph(generate(spec), fmt, (f"family {spec.model_dump_json()}",))


@cli.command("oracle")
@_graph_input
@click.option(
    "--param",
    "params",
    multiple=True,
    type=click.Choice(get_args(ParamKind)),
    help="Parameter to compute (repeatable).",
)
@click.option(
    "--predicate",
    "predicates",
    multiple=True,
    type=click.Choice(get_args(PredicateKind)),
    help="Predicate to decide (repeatable).",
)
@click.option("--max-n", type=click.IntRange(min=1), help="Override the size guard of every computation.")
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
def oracle_command(
    graph: Graph,
    source: str,
    params: tuple[ParamKind, ...],
    predicates: tuple[PredicateKind, ...],
    max_n: int | None,
    as_json: bool,
) -> None:
    """
    Compute parameters and decide predicates by brute force.
    """
    if not params and not predicates:
        raise click.UsageError("At least one --param or --predicate is required.")

    config: OracleConfig | None = None
    if max_n is not None:
        logger.warning("Oracle size guards overridden: at most %d vertices", max_n)
        kinds = (*get_args(ParamKind), *get_args(PredicateKind))
        config = {kind: max_n for kind in kinds}  # type: ignore[misc]

    values: dict[str, int] = {}
    certificates: dict[str, list[Any]] = {}
    lines: list[str] = []
    for kind in params:
        start = time.perf_counter()
        try:
            value, certificate = brute_param(graph, kind, config)
        except ValueError as e:
            raise _ExitError(str(e), 2) from e

        logger.debug("Oracle %s took %d us", kind, _elapsed_us(start))
        values[kind] = value
        certificates[kind] = list(certificate)
        lines.append(f"{kind} {value} {list(certificate)}")

    deciders = {"is_np": brute_is_np, "is_mnnp": brute_is_mnnp, "is_strongly_np": brute_is_strongly_np}
    for predicate in predicates:
        decided = deciders[predicate](graph, config)
        values[predicate] = int(decided)
        lines.append(f"{predicate} {str(decided).lower()}")

    if as_json:
        _emit_report(RunReport(input=source, params=values, certificates=certificates))
    else:
        click.echo("\n".join(lines))


@cli.command("reduce")
@_graph_input
@click.option(
    "--kind",
    type=click.Choice(["alpha-to-an", "vc-to-pn"]),
    required=True,
    help="The reduction to apply to the input graph.",
)
@click.option(
    "--out-format", "out_fmt", type=click.Choice(get_args(GraphFormat)), default="edge", show_default=True
)
def reduce_command(graph: Graph, source: str, kind: str, out_fmt: GraphFormat) -> None:
    """
    Print the co-bipartite instance a hardness reduction builds from the input graph.
    """
    instance = reduce_alpha_to_an(graph) if kind == "alpha-to-an" else reduce_vc_to_pn(graph)
    if out_fmt == "json":
        _write_graph(instance.graph, out_fmt)
    else:
        click.echo(instance.to_text(), nl=False)


@cli.command("bench")
@click.option("--start", type=click.IntRange(min=1), default=1000, show_default=True)
@click.option("--steps", type=click.IntRange(min=1), default=5, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), required=True, help="Seed of the random instances.")
@click.option(
    "--family",
    type=click.Choice(get_args(BenchFamily)),
    default="random_treecograph",
    show_default=True,
)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit JSON lines.")
def bench_command(
    start: int, steps: int, seed: int, family: BenchFamily, workers: int, as_json: bool
) -> None:
    """
    Time the pipeline on random instances of doubling size.
    """
    config: BenchConfig = {"start": start, "steps": steps, "seed": seed, "family": family}
    for step in run_bench(config, workers=workers):
        ratio = "-" if step.ratio is None else f"{step.ratio:.2f}"
        if as_json:
            report = RunReport(
                input=f"{family}:{step.n}",
                params={"n": step.n, "m": step.m},
                timing={
                    "decompose": step.decompose_us,
                    "recognize": step.recognize_us,
                    "sets": step.sets_us,
                },
            )
            click.echo(report.model_dump_json())
        else:
            click.echo(
                f"n={step.n} m={step.m} decompose={step.decompose_us}us "
                f"recognize={step.recognize_us}us sets={step.sets_us}us ratio={ratio}"
            )


@cli.command("selftest")
@click.option("--n", "n", type=click.IntRange(min=1, max=7), default=6, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.pass_context
def selftest_command(ctx: click.Context, n: int, workers: int) -> None:
    """
    Compare every algorithm with the oracles on all labeled graphs with n vertices.
    """
    report = run_sweep(n, workers=workers)
    for mismatch in report.mismatches:
        click.echo(mismatch)

    mismatches = len(report.mismatches)
    click.echo(f"checked {report.checked} graphs, {report.supported} supported, {mismatches} mismatches")
    if not report.ok:
        ctx.exit(3)


def main() -> None:
    cli(prog_name="nbperfect")
