"""CLI commands."""
from __future__ import annotations

import logging
from contextlib import nullcontext
from enum import Enum
from pathlib import Path

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from src.bounds.mmd_plus import degeneracy_bound, mmd_plus_trace
from src.config import settings
from src.driver.config import IncompatibleConfigError, RunConfig, TurboKind
from src.driver.optimizer import optimize as run_optimize
from src.graph.corpus import load_corpus_graph
from src.graph.graph import Graph, GraphError, GraphFormatError, parse_graph
from src.heuristics.selection import HeuristicKind
from src.ordering.evaluate import OrderingError, evaluate_full_ordering
from src.ordering.io import read_ordering, write_ordering
from src.oracle.exact import OracleLimitError, exact_wcol, exact_wcol_bruteforce
from src.report.formatter import OutputFormat, emit_stats, format_run_report

__version__ = "1.0.0"

EXIT_INPUT_ERROR = 2
EXIT_INCOMPATIBLE = 3

app = typer.Typer(
    add_completion=False,
    help="wcol-turbo - Orderings with small weak r-coloring number",
)
console = Console()
err_console = Console(stderr=True)


class BoundMethod(str, Enum):
    DEGENERACY = "degeneracy"
    MMD_PLUS = "mmd+"


def _configure_logging(verbose: bool) -> None:
    level = "DEBUG" if verbose else settings.logging.level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[
            RichHandler(
                console=err_console,
                rich_tracebacks=settings.logging.rich_tracebacks,
                show_path=False,
            )
        ],
        force=True,
    )


def _fail(message: str, code: int = EXIT_INPUT_ERROR) -> typer.Exit:
    err_console.print(f"[red]Error:[/red] {message}", soft_wrap=True)
    return typer.Exit(code)


def _load_graph(source: str) -> tuple[Graph, str]:
    """Read a graph file, or a bundled instance given as ``corpus:<name>``."""
    if source.startswith("corpus:"):
        name = source.removeprefix("corpus:")
        try:
            return load_corpus_graph(name), name
        except GraphError as e:
            raise _fail(str(e))
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise _fail(f"cannot read graph file {path}: {e.strerror or e}")
    try:
        return parse_graph(text), path.stem
    except GraphFormatError as e:
        raise _fail(f"{path}: {e}")


def _check_output_format(output: str) -> OutputFormat:
    if output not in ("cli", "json", "markdown"):
        raise _fail(f"Invalid output format '{output}' for --output. Use cli, json, or markdown.")
    return output  # type: ignore[return-value]


@app.command()
def optimize(
    graph_source: str = typer.Argument(..., metavar="GRAPH", help="Edge-list file or corpus:<name>"),
    radius: int = typer.Option(settings.solver.default_radius, "--radius", "-r", help="Radius r"),
    heuristic: HeuristicKind = typer.Option(HeuristicKind.DEGREE_LR, "--heuristic", help="Greedy rule"),
    turbo: TurboKind = typer.Option(TurboKind.NONE, "--turbo", help="Repair search"),
    timeout: float = typer.Option(
        settings.solver.default_timeout, "--timeout", help="Seconds after the baseline"
    ),
    no_timeout: bool = typer.Option(False, "--no-timeout", help="Run until optimality is proven"),
    seed: int = typer.Option(settings.solver.default_seed, "--seed", help="Random seed"),
    target: int | None = typer.Option(None, "--target", help="First k to try"),
    merge_attempts: int = typer.Option(
        settings.solver.merge_attempts, "--merge-attempts", help="Attempts per merge repair"
    ),
    order_out: Path | None = typer.Option(None, "--order-out", help="Write the ordering here"),
    stats_out: Path | None = typer.Option(None, "--stats-out", help="Write stats JSON here"),
    output: str = typer.Option("cli", "--output", "-o", help="Output format: cli, json, markdown"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Compute an ordering with small weak r-coloring number.

    Examples:
        wcol-turbo optimize graph.txt --radius 2 --heuristic wreach --turbo merge
        wcol-turbo optimize corpus:karate -r 3 --turbo ic --timeout 60 -o json
    """
    _configure_logging(verbose)
    output_format = _check_output_format(output)
    try:
        cfg = RunConfig(
            r=radius,
            heuristic=heuristic,
            turbo=turbo,
            timeout=None if no_timeout else timeout,
            seed=seed,
            target=target,
            merge_attempts=merge_attempts,
        )
    except IncompatibleConfigError as e:
        raise _fail(str(e), EXIT_INCOMPATIBLE)
    except ValueError as e:
        raise _fail(str(e))

    graph, name = _load_graph(graph_source)
    if output_format == "cli":
        console.print(Panel.fit(
            f"[bold cyan]wcol-turbo[/bold cyan]\n[dim]Optimizing:[/dim] {name} "
            f"(n={graph.n}, m={graph.m})",
            border_style="cyan",
        ))

    status = (
        console.status("[bold blue]Optimizing...", spinner="dots")
        if output_format == "cli"
        else nullcontext()
    )
    with status:
        result = run_optimize(graph, cfg, instance=name)

    try:
        if order_out:
            order_out.write_text(write_ordering(result.order, graph), encoding="utf-8")
        if stats_out:
            emit_stats(result.stats, stats_out)
    except OSError as e:
        raise _fail(f"cannot write output: {e}")

    report = format_run_report(result.stats, output_format)
    if output_format == "cli":
        console.print(report)
        if order_out:
            console.print(f"\n[green]Ordering saved to:[/green] {order_out}")
        if stats_out:
            console.print(f"[green]Stats saved to:[/green] {stats_out}")
    else:
        console.print(report, markup=False, highlight=False, soft_wrap=True)


@app.command()
def verify(
    graph_source: str = typer.Argument(..., metavar="GRAPH", help="Edge-list file or corpus:<name>"),
    ordering: Path = typer.Argument(..., help="Ordering file, one label per line"),
    radius: int = typer.Option(settings.solver.default_radius, "--radius", "-r", help="Radius r"),
) -> None:
    """Certify the weak r-coloring number of an ordering."""
    if radius < 1:
        raise _fail(f"--radius must be at least 1, got {radius}")
    graph, _ = _load_graph(graph_source)
    try:
        order = read_ordering(ordering.read_text(encoding="utf-8"), graph)
    except OSError as e:
        raise _fail(f"cannot read ordering file {ordering}: {e.strerror or e}")
    except OrderingError as e:
        raise _fail(f"{ordering}: {e}")

    wcol, witness = evaluate_full_ordering(graph, radius, order)
    witness_label = graph.labels[witness] if witness is not None else "-"
    console.print(f"wcol_{radius} = [bold]{wcol}[/bold] (witness vertex {witness_label})")


@app.command()
def oracle(
    graph_source: str = typer.Argument(..., metavar="GRAPH", help="Edge-list file or corpus:<name>"),
    radius: int = typer.Option(settings.solver.default_radius, "--radius", "-r", help="Radius r"),
    limit: int = typer.Option(settings.solver.oracle_limit, "--limit", help="Max vertices"),
    order_out: Path | None = typer.Option(None, "--order-out", help="Write the ordering here"),
    cross_check: bool = typer.Option(
        False, "--cross-check", help="Also enumerate all permutations and compare"
    ),
) -> None:
    """Exact weak r-coloring number of a tiny graph."""
    if radius < 1:
        raise _fail(f"--radius must be at least 1, got {radius}")
    graph, _ = _load_graph(graph_source)
    try:
        with console.status("[bold blue]Solving exactly...", spinner="dots"):
            wcol, order = exact_wcol(graph, radius, limit=limit)
            enumerated = exact_wcol_bruteforce(graph, radius, limit)[0] if cross_check else None
    except OracleLimitError as e:
        raise _fail(f"{e} (raise --limit to override)")

    if order_out:
        order_out.write_text(write_ordering(order, graph), encoding="utf-8")
    labels = " ".join(str(graph.labels[v]) for v in order)
    console.print(f"wcol_{radius} = [bold]{wcol}[/bold]")
    console.print(f"[dim]Optimal ordering:[/dim] {labels}")
    if enumerated is not None:
        if enumerated != wcol:
            raise _fail(f"permutation enumeration gives {enumerated}, search gives {wcol}", 1)
        console.print("[green]Cross-check passed:[/green] permutation enumeration agrees")


@app.command("lower-bound")
def lower_bound(
    graph_source: str = typer.Argument(..., metavar="GRAPH", help="Edge-list file or corpus:<name>"),
    radius: int = typer.Option(settings.solver.default_radius, "--radius", "-r", help="Radius r"),
    method: BoundMethod = typer.Option(BoundMethod.MMD_PLUS, "--method", help="Bound to compute"),
    trace: bool = typer.Option(False, "--trace", help="Show the contraction trace"),
) -> None:
    """Lower bound on the weak r-coloring number."""
    if radius < 1:
        raise _fail(f"--radius must be at least 1, got {radius}")
    graph, _ = _load_graph(graph_source)
    if method is BoundMethod.DEGENERACY:
        console.print(f"degeneracy + 1 = [bold]{degeneracy_bound(graph)}[/bold]")
        return

    result = mmd_plus_trace(graph, radius)
    console.print(f"wcol_{radius} >= [bold]{result.bound}[/bold] (mmd+)")
    if trace and result.steps:
        table = Table(title="Contraction trace")
        table.add_column("Step", justify="right")
        table.add_column("Action")
        table.add_column("Vertex", justify="right")
        table.add_column("Degree", justify="right")
        table.add_column("Partner", justify="right")
        table.add_column("Into", justify="right")
        for i, step in enumerate(result.steps, 1):
            table.add_row(
                str(i),
                step.action,
                _trace_name(graph, step.vertex),
                str(step.degree),
                _trace_name(graph, step.partner),
                _trace_name(graph, step.merged),
            )
        console.print(table)


def _trace_name(graph: Graph, vertex: int | None) -> str:
    """Original label, or ``m<i>`` for the i-th contracted vertex."""
    if vertex is None:
        return ""
    if vertex < graph.n:
        return str(graph.labels[vertex])
    return f"m{vertex - graph.n + 1}"


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"[bold]wcol-turbo[/bold] v{__version__}")
    console.print("[dim]Turbocharged heuristics for weak coloring numbers[/dim]")


if __name__ == "__main__":
    app()
