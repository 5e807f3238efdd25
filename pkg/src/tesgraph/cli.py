"""Command-line surface: label, verify, exact, bounds, scan, gen, dot.

Exit status convention: 0 success (scan: all rows agree), 1 verification or
scan disagreement, 2 usage or I/O errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from tesgraph.bounds import bounds_report, declared_tes
from tesgraph.construct import ConjectureViolationError, label_graph
from tesgraph.exact import BUDGET_EXHAUSTED, SearchBudgetError, SearchConfig, exact_tes, exists_labelling
from tesgraph.generate import gen_random_connected, gen_random_tree
from tesgraph.graph import GraphError
from tesgraph.io import ParseError, emit_graph, emit_labelled_dot, emit_labelling, parse_graph, parse_labelling
from tesgraph.labelling import LabellingError, verify_irregular
from tesgraph.scan import DEFAULT_EXACT_CUTOFF, scan


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except ParseError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(2)


@click.group()
def main() -> None:
    """Total edge irregularity strength toolkit."""


@main.command("label")
@click.argument("graph_file")
@click.option("--out", "out_path", type=click.Path(), help="write the certificate here")
@click.option("--dot", "dot_path", type=click.Path(), help="write a dot rendering here")
def label_cmd(graph_file: str, out_path: str | None, dot_path: str | None) -> None:
    """Construct an edge irregular total labelling at the declared value."""
    g = _load_graph(graph_file)
    try:
        result = label_graph(g)
    except (GraphError, ConjectureViolationError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"tes {result.value} method {result.method} fallback {str(result.fallback_used).lower()}")
    if out_path:
        Path(out_path).write_text(emit_labelling(result.certificate))
    if dot_path:
        Path(dot_path).write_text(emit_labelled_dot(g, result.certificate))


@main.command("verify")
@click.argument("graph_file")
@click.argument("cert_file")
def verify_cmd(graph_file: str, cert_file: str) -> None:
    """Check a certificate against a graph."""
    g = _load_graph(graph_file)
    try:
        cert = parse_labelling(_read(cert_file))
    except ParseError as exc:
        click.echo(f"error: {cert_file}: {exc}", err=True)
        sys.exit(2)
    report = verify_irregular(g, cert)
    if report.ok:
        click.echo(f"ok: edge irregular with bound {cert.bound_k}")
        return
    for violation in report.violations:
        click.echo(f"violation: {violation}")
    sys.exit(1)


@main.command("exact")
@click.argument("graph_file")
@click.option("--k", "k", type=int, help="decide a single bound instead of optimizing")
@click.option("--budget", type=int, help="node budget for the search")
@click.option("--parallel", is_flag=True, help="split the first edge's assignments over processes")
def exact_cmd(graph_file: str, k: int | None, budget: int | None, parallel: bool) -> None:
    """Exact strength (or a single decision) by complete search."""
    g = _load_graph(graph_file)
    cfg = SearchConfig(node_budget=budget, parallel=parallel)
    if k is not None:
        outcome = exists_labelling(g, k, cfg)
        if outcome is BUDGET_EXHAUSTED:
            click.echo("budget-exhausted")
        elif outcome is None:
            click.echo("none")
        else:
            click.echo(f"found\n{emit_labelling(outcome)}", nl=False)
        return
    try:
        result = exact_tes(g, cfg)
    except SearchBudgetError as exc:
        click.echo(f"budget-exhausted at k={exc.k}")
        sys.exit(1)
    click.echo(f"tes {result.value}")


@main.command("bounds")
@click.argument("graph_file")
def bounds_cmd(graph_file: str) -> None:
    """Closed-form bounds and the declared value."""
    g = _load_graph(graph_file)
    try:
        report = bounds_report(g)
    except GraphError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"edge_lower {report.edge_lower}")
    click.echo(f"degree_lower {report.degree_lower}")
    click.echo(f"trivial_upper {report.trivial_upper}")
    conditional = "-" if report.conditional_upper is None else report.conditional_upper
    click.echo(f"conditional_upper {conditional}")
    click.echo(f"declared {declared_tes(g)}")


@main.command("scan")
@click.argument("spec")
@click.option("--out", "out_path", type=click.Path(), required=True, help="CSV output path")
@click.option("--exact-cutoff", type=int, default=DEFAULT_EXACT_CUTOFF, show_default=True)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--timing", is_flag=True, help="write real elapsed_ms (breaks byte determinism)")
def scan_cmd(spec: str, out_path: str, exact_cutoff: int, workers: int, timing: bool) -> None:
    """Audit declared vs constructed vs exact values over a universe."""
    try:
        summary = scan(spec, out_path, exact_cutoff=exact_cutoff, workers=workers, timing=timing)
    except (GraphError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(
        f"records {summary.records} disagreements {summary.disagreements} fallbacks {summary.fallbacks}"
    )
    if summary.disagreements:
        sys.exit(1)


@main.command("gen")
@click.argument("kind", type=click.Choice(["tree", "connected"]))
@click.option("--n", type=int, required=True)
@click.option("--m", type=int, help="edge count (connected only)")
@click.option("--seed", type=int, default=0, show_default=True)
def gen_cmd(kind: str, n: int, m: int | None, seed: int) -> None:
    """Emit a random graph in the graph file format."""
    try:
        if kind == "tree":
            g = gen_random_tree(n, seed)
        else:
            if m is None:
                click.echo("error: --m is required for connected graphs", err=True)
                sys.exit(2)
            g = gen_random_connected(n, m, seed)
    except GraphError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(emit_graph(g), nl=False)


@main.command("dot")
@click.argument("graph_file")
@click.argument("cert_file")
def dot_cmd(graph_file: str, cert_file: str) -> None:
    """Render a verified certificate in dot syntax."""
    g = _load_graph(graph_file)
    try:
        cert = parse_labelling(_read(cert_file))
    except ParseError as exc:
        click.echo(f"error: {cert_file}: {exc}", err=True)
        sys.exit(2)
    try:
        click.echo(emit_labelled_dot(g, cert), nl=False)
    except LabellingError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
