"""Closed-form bounds and the declared irregularity strength value.

All arithmetic is integer-only; ceil(a/b) is computed as -(-a // b).
"""

from __future__ import annotations

from dataclasses import dataclass

from tesgraph.graph import Graph, GraphError, degrees, is_tree, max_degree


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundsReport:
    edge_lower: int
    degree_lower: int
    trivial_upper: int
    conditional_upper: int | None


def _require_edges(g: Graph) -> None:
    if g.edge_count == 0:
        raise GraphError("bounds are undefined for an edgeless graph")


def bounds_report(g: Graph) -> BoundsReport:
    """Lower and upper bounds valid for every graph with at least one edge.

    The improved upper bound |E| - delta applies only to low-degree graphs
    (2*delta <= |E| - 1); in the high-degree regime it would drop below the
    degree lower bound, as the single edge already shows.
    """
    _require_edges(g)
    m = g.edge_count
    delta = max_degree(g)
    conditional = m - delta if 2 * delta <= m - 1 else None
    return BoundsReport(
        edge_lower=ceil_div(m + 2, 3),
        degree_lower=ceil_div(delta + 1, 2),
        trivial_upper=m,
        conditional_upper=conditional,
    )


def is_k5_core(g: Graph) -> bool:
    """True when the non-isolated part of g is exactly the complete graph on 5 vertices.

    K5 is the unique graph on 5 vertices with 10 edges where every vertex has
    degree 4, so no general isomorphism machinery is needed.
    """
    if g.edge_count != 10:
        return False
    degs = degrees(g)
    support = [d for d in degs if d > 0]
    return len(support) == 5 and all(d == 4 for d in support)


def declared_tes(g: Graph) -> int:
    """The value the strength is declared to take: the bound formula, except K5.

    Isolated vertices are ignored; when the edge-bearing part is exactly K5
    the declared value is 5 instead of the formula's 4.
    """
    _require_edges(g)
    if is_k5_core(g):
        return 5
    report = bounds_report(g)
    return max(report.edge_lower, report.degree_lower)


def tree_lambda(t: Graph) -> int:
    """Strength value for a tree: max(ceil((n+1)/3), ceil((D+1)/2))."""
    if not is_tree(t):
        raise GraphError("tree_lambda requires a tree")
    _require_edges(t)
    n = t.vertex_count
    return max(ceil_div(n + 1, 3), ceil_div(max_degree(t) + 1, 2))
