"""File formats: graph files, labelling certificates, and dot export.

Graph files: a header line "n m", then m lines "u v" with 0-based endpoints.
Certificate files: a header line "k", then one "v <i> <label>" line per vertex
and one "e <u> <v> <label>" line per edge.  '#' comments and blank lines are
permitted in both; weights are always recomputed, never read from a file.
"""

from __future__ import annotations

from tesgraph.graph import Graph, GraphError, from_edge_list
from tesgraph.labelling import LabellingError, TotalLabelling, edge_weight, verify_irregular


class ParseError(Exception):
    """Malformed input file; `line` is the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _data_lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield i, line


def _ints(line_no: int, line: str, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(line_no, f"expected {what}, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(line_no, f"expected {what}, got {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    try:
        line_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header line 'n m'") from None
    n, m = _ints(line_no, header, 2, "header 'n m'")
    pairs = []
    for line_no, line in lines:
        u, v = _ints(line_no, line, 2, "edge 'u v'")
        try:
            from_edge_list(n, [(u, v)])
        except GraphError as exc:
            raise ParseError(line_no, str(exc)) from None
        pairs.append((u, v))
    if len(pairs) != m:
        raise ParseError(line_no if pairs else 1, f"header declares {m} edges, found {len(pairs)}")
    try:
        return from_edge_list(n, pairs)
    except GraphError as exc:  # duplicates across lines
        raise ParseError(1, str(exc)) from None


def emit_graph(g: Graph) -> str:
    out = [f"{g.vertex_count} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_labelling(text: str) -> TotalLabelling:
    lines = _data_lines(text)
    try:
        line_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header line 'k'") from None
    (k,) = _ints(line_no, header, 1, "header 'k'")
    vertex_labels: dict[int, int] = {}
    edge_labels: dict[tuple[int, int], int] = {}
    for line_no, line in lines:
        parts = line.split()
        if parts[0] == "v":
            i, lbl = _ints(line_no, " ".join(parts[1:]), 2, "'v <i> <label>'")
            if i in vertex_labels:
                raise ParseError(line_no, f"duplicate vertex {i}")
            vertex_labels[i] = lbl
        elif parts[0] == "e":
            u, v, lbl = _ints(line_no, " ".join(parts[1:]), 3, "'e <u> <v> <label>'")
            key = (min(u, v), max(u, v))
            if key in edge_labels:
                raise ParseError(line_no, f"duplicate edge {key}")
            edge_labels[key] = lbl
        else:
            raise ParseError(line_no, f"expected 'v' or 'e' record, got {line!r}")
    n = len(vertex_labels)
    if sorted(vertex_labels) != list(range(n)):
        raise ParseError(1, "vertex records must cover 0..n-1 exactly")
    return TotalLabelling(tuple(vertex_labels[i] for i in range(n)), edge_labels, k)


def emit_labelling(labelling: TotalLabelling) -> str:
    out = [str(labelling.bound_k)]
    out.extend(f"v {i} {lbl}" for i, lbl in enumerate(labelling.vertex_labels))
    out.extend(f"e {u} {v} {lbl}" for (u, v), lbl in sorted(labelling.edge_labels.items()))
    return "\n".join(out) + "\n"


def emit_labelled_dot(g: Graph, labelling: TotalLabelling) -> str:
    """Dot-syntax rendering with labels and recomputed weights in captions.

    Only verified labellings are rendered; a failing certificate raises.
    """
    report = verify_irregular(g, labelling)
    if not report.ok:
        raise LabellingError(f"labelling fails verification: {report.violations[0]}")
    out = ["graph G {"]
    for v, lbl in enumerate(labelling.vertex_labels):
        out.append(f'  v{v} [label="v{v}:{lbl}"];')
    for e in g.edges:
        w = edge_weight(g, labelling, e)
        out.append(f'  v{e[0]} -- v{e[1]} [label="{labelling.edge_labels[e]} (w={w})"];')
    out.append("}")
    return "\n".join(out) + "\n"
