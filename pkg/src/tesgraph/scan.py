"""Conjecture-scan pipeline: run declared / constructed / exact values over a
universe of graphs and persist the outcome as a deterministic CSV.

Universe specs:
    tree-enum:N                         all labelled trees on 2..N vertices
    connected-enum:N                    all connected graphs on 2..N vertices (N <= 5)
    random-connected:COUNT:NMAX:MMAX:SEED
    random-disconnected:COUNT:NMAX:MMAX:SEED
    k5                                  the single complete graph on 5 vertices

The CSV bytes are deterministic for a fixed spec and seed: rows are written in
universe order regardless of worker scheduling, and the elapsed_ms column is
written as 0 unless timing output is explicitly requested.  A companion file
"<out>.graphs" records every graph's edge list for cross-language replay.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from tesgraph.bounds import declared_tes, is_k5_core, max_degree
from tesgraph.construct import ConjectureViolationError, label_graph
from tesgraph.exact import exact_tes
from tesgraph.generate import (
    enumerate_connected,
    enumerate_labelled_trees,
    random_connected_universe,
    random_disconnected_universe,
)
from tesgraph.graph import Edge, Graph, GraphError
from tesgraph.labelling import verify_irregular

CSV_HEADER = "graph_id,n,m,delta,declared,constructed,exact,agree,fallback,elapsed_ms"
DEFAULT_EXACT_CUTOFF = 10


@dataclass(frozen=True)
class ScanRecord:
    graph_id: str
    n: int
    m: int
    delta: int
    declared: int
    constructed: int
    exact: int | None
    agree: bool
    fallback_used: bool
    elapsed_ms: int

    def csv_row(self, timing: bool = False) -> str:
        exact = "" if self.exact is None else str(self.exact)
        elapsed = self.elapsed_ms if timing else 0
        return (
            f"{self.graph_id},{self.n},{self.m},{self.delta},{self.declared},"
            f"{self.constructed},{exact},{str(self.agree).lower()},"
            f"{str(self.fallback_used).lower()},{elapsed}"
        )


def parse_universe(spec: str) -> Iterator[tuple[str, Graph]]:
    parts = spec.split(":")
    kind = parts[0]
    if kind == "k5":
        from tesgraph.construct import k5_graph

        yield "k5", k5_graph()
        return
    if kind == "tree-enum":
        n_max = int(parts[1])
        for n in range(2, n_max + 1):
            for i, t in enumerate(enumerate_labelled_trees(n)):
                yield f"tree-enum-n{n}-{i:06d}", t
        return
    if kind == "connected-enum":
        n_max = int(parts[1])
        for i, g in enumerate(enumerate_connected(n_max)):
            gid = f"connected-enum-{i:05d}"
            if is_k5_core(g):
                gid += "+k5"
            yield gid, g
        return
    if kind == "random-connected":
        count, n_max, m_max, seed = (int(x) for x in parts[1:5])
        yield from random_connected_universe(count, n_max, m_max, seed)
        return
    if kind == "random-disconnected":
        count, n_max, m_max, seed = (int(x) for x in parts[1:5])
        yield from random_disconnected_universe(count, n_max, m_max, seed)
        return
    raise GraphError(f"unknown universe spec {spec!r}")


def evaluate_graph(item: tuple[str, int, tuple[Edge, ...], int]) -> ScanRecord:
    """Worker body: one graph in, one record out.  Pure and picklable."""
    graph_id, n, edges, exact_cutoff = item
    g = Graph(n, edges)
    start = time.perf_counter()
    declared = declared_tes(g)
    constructed = 0
    fallback = False
    cert_ok = False
    try:
        result = label_graph(g)
        constructed = result.value
        fallback = result.fallback_used
        cert_ok = result.certificate is not None and verify_irregular(g, result.certificate).ok
    except ConjectureViolationError:
        fallback = True
    exact = None
    if g.edge_count <= exact_cutoff:
        exact = exact_tes(g).value
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    agree = cert_ok and declared == constructed and (exact is None or exact == declared)
    return ScanRecord(
        graph_id=graph_id,
        n=n,
        m=len(edges),
        delta=max_degree(g),
        declared=declared,
        constructed=constructed,
        exact=exact,
        agree=agree,
        fallback_used=fallback,
        elapsed_ms=elapsed_ms,
    )


@dataclass(frozen=True)
class ScanSummary:
    records: int
    disagreements: int
    fallbacks: int


def scan(
    spec: str,
    out_path: str | Path,
    *,
    exact_cutoff: int = DEFAULT_EXACT_CUTOFF,
    workers: int = 1,
    timing: bool = False,
) -> ScanSummary:
    """Run the universe, write the CSV and the graphs companion file.

    Rows appear in universe order whatever the worker count, so output bytes
    depend only on the spec, the seed inside it, and the cutoff.
    """
    out_path = Path(out_path)
    items = [(gid, g.vertex_count, g.edges, exact_cutoff) for gid, g in parse_universe(spec)]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(evaluate_graph, items, chunksize=max(1, len(items) // (workers * 8) or 1)))
    else:
        records = [evaluate_graph(item) for item in items]

    lines = [CSV_HEADER]
    lines.extend(rec.csv_row(timing=timing) for rec in records)
    out_path.write_text("\n".join(lines) + "\n")

    companion = [f"# universe: {spec}"]
    for (gid, n, edges, _), _rec in zip(items, records):
        companion.append(f"# {gid}")
        companion.append(f"{n} {len(edges)}")
        companion.extend(f"{u} {v}" for u, v in edges)
    Path(str(out_path) + ".graphs").write_text("\n".join(companion) + "\n")

    disagreements = sum(1 for r in records if not r.agree)
    fallbacks = sum(1 for r in records if r.fallback_used)
    return ScanSummary(records=len(records), disagreements=disagreements, fallbacks=fallbacks)
