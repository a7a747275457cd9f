"""Report formatting utilities."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Literal, TextIO

from src.config import settings
from src.driver.stats import RunStats, invocation_summary

OutputFormat = Literal["cli", "json", "markdown"]


def emit_stats(stats: RunStats, sink: TextIO | Path | str) -> None:
    """Write the stats of one run as a single JSON object.

    Args:
        stats: Counters of the run
        sink: Open text stream or a file path

    Raises:
        OSError: If the sink cannot be written
    """
    payload = _format_json(stats)
    if isinstance(sink, (str, Path)):
        Path(sink).write_text(payload + "\n", encoding="utf-8")
    else:
        sink.write(payload + "\n")


def format_run_report(stats: RunStats, output: OutputFormat = "cli") -> str:
    """Format run statistics for output.

    Args:
        stats: Counters of the run
        output: Output format - 'cli', 'json', or 'markdown'

    Returns:
        Formatted string representation of the run
    """
    if output == "json":
        return _format_json(stats)
    elif output == "markdown":
        return _format_markdown(stats)
    else:
        return _format_cli(stats)


def _format_json(stats: RunStats) -> str:
    """Format stats as JSON."""
    return json.dumps(stats.to_dict(), ensure_ascii=False, indent=settings.report.json_indent)


def _status(stats: RunStats) -> str:
    if stats.proven_optimal:
        return "optimal"
    if stats.timed_out:
        return "time budget exhausted"
    return "finished"


def _format_cli(stats: RunStats) -> str:
    """Format stats for terminal display with Rich-compatible markup."""
    lines = []
    name = stats.instance or "graph"
    lines.append("[bold cyan]Weak Coloring Run Report[/bold cyan]")
    lines.append(f"[dim]Instance:[/dim] {name} (n={stats.n}, m={stats.m})")
    lines.append(
        f"[dim]Config:[/dim] r={stats.r}, heuristic={stats.heuristic}, "
        f"turbo={stats.turbo}, seed={stats.seed}"
    )
    lines.append("")

    improved = stats.final_k < stats.baseline_k
    color = "green" if improved else "yellow"
    lines.append(
        f"[bold]wcol_{stats.r}:[/bold] [{color}]{stats.final_k}[/{color}] "
        f"(baseline {stats.baseline_k}, lower bound {stats.lower_bound})"
    )
    lines.append(f"[bold]Status:[/bold] {_status(stats)}")
    lines.append("")

    lines.append("[bold]Search:[/bold]")
    lines.append(f"  Invocations     {stats.cnt_tc}")
    lines.append(f"  Nodes           {stats.nodes_total:,}")
    lines.append(f"  Time in repair  {stats.time_in_tc * 1000:.1f} ms")
    lines.append(f"  Total time      {stats.total_time * 1000:.1f} ms")

    summary = invocation_summary(stats)
    if summary:
        lines.append("")
        lines.append("[bold]By turbocharger:[/bold]")
        for kind, entry in summary.items():
            lines.append(
                f"  {kind:6} {entry['successes']}/{entry['count']} succeeded, "
                f"{entry['nodes']:,} nodes, max c={entry['max_c']}"
            )

    if len(stats.timeline) > 1:
        lines.append("")
        lines.append("[bold]Improvements:[/bold]")
        for point in stats.timeline:
            lines.append(f"  {point.elapsed * 1000:10.1f} ms  k={point.k}")

    return "\n".join(lines)


def _format_markdown(stats: RunStats) -> str:
    """Format stats as Markdown."""
    lines = []
    lines.append("# Weak Coloring Run Report")
    lines.append("")
    lines.append(f"**Instance:** {stats.instance or 'graph'} (n={stats.n}, m={stats.m})")
    lines.append("")

    lines.append("## Result")
    lines.append("")
    lines.append("| Field | Value |")
    lines.append("|-------|-------|")
    lines.append(f"| Radius | {stats.r} |")
    lines.append(f"| Heuristic | {stats.heuristic} |")
    lines.append(f"| Turbocharger | {stats.turbo} |")
    lines.append(f"| Seed | {stats.seed} |")
    lines.append(f"| Baseline k | {stats.baseline_k} |")
    lines.append(f"| Final k | {stats.final_k} |")
    lines.append(f"| Lower bound | {stats.lower_bound} |")
    lines.append(f"| Status | {_status(stats)} |")
    lines.append("")

    if stats.invocations:
        lines.append("## Turbocharger Invocations")
        lines.append("")
        lines.append("| Kind | Count | Successes | Nodes | Max c |")
        lines.append("|------|-------|-----------|-------|-------|")
        for kind, entry in invocation_summary(stats).items():
            lines.append(
                f"| {kind} | {entry['count']} | {entry['successes']} "
                f"| {entry['nodes']} | {entry['max_c']} |"
            )
        lines.append("")

    lines.append("## Timeline")
    lines.append("")
    lines.append("| Elapsed (ms) | k |")
    lines.append("|--------------|---|")
    for point in stats.timeline:
        lines.append(f"| {point.elapsed * 1000:.1f} | {point.k} |")

    return "\n".join(lines)
