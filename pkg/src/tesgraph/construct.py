"""Labelling of arbitrary graphs: trees plus added edges, then unions of components.

Connected graphs are labelled by decomposing into a spanning tree and re-running
the partition/plan machinery on each edge-augmented prefix; disconnected graphs
are labelled component by component with stacked weight windows so weights stay
globally distinct.  Wherever the constructive route fails, the exact solver is
used as a fallback at the declared value, and a failure even there is surfaced
as a candidate counterexample, never absorbed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from tesgraph.bounds import ceil_div, declared_tes, is_k5_core
from tesgraph.exact import exists_labelling
from tesgraph.graph import (
    Edge,
    Graph,
    GraphError,
    connected_components,
    degrees,
    from_edge_list,
    is_connected,
    is_tree,
    max_degree_vertex,
    spanning_decomposition,
)
from tesgraph.labelling import TotalLabelling, verify_irregular, weight_multiset
from tesgraph.result import (
    METHOD_AUGMENT,
    METHOD_COMPOSITION,
    METHOD_EXACT,
    METHOD_FORMULA,
    METHOD_TREE,
    TesResult,
)
from tesgraph.treelabel import (
    PARTITION_VARIANTS,
    InfeasiblePlanError,
    VertexPartition,
    label_tree,
    ladder_label,
    partition_tree,
)


class ConjectureViolationError(Exception):
    """Exact search failed at the declared value: a candidate counterexample."""

    def __init__(self, g: Graph, k: int, context: str):
        super().__init__(
            f"no edge irregular total {k}-labelling found for a graph with "
            f"n={g.vertex_count}, m={g.edge_count} ({context}); candidate counterexample"
        )
        self.graph = g
        self.k = k


@dataclass(frozen=True)
class AugmentationCase:
    """Which block family a new edge lands in, and the weight slack before it."""

    edge_class: str  # "AA-or-CC" | "AB-or-CB" | "BB-or-AC"
    slack: int


def augmentation_case(g: Graph, partition: VertexPartition, bound_k: int, e: Edge) -> AugmentationCase:
    cu, cv = partition.vertex_class(e[0]), partition.vertex_class(e[1])
    pair = "".join(sorted((cu, cv)))
    if pair in ("AA", "CC"):
        edge_class = "AA-or-CC"
    elif pair in ("AB", "BC"):
        edge_class = "AB-or-CB"
    else:
        edge_class = "BB-or-AC"
    return AugmentationCase(edge_class=edge_class, slack=(3 * bound_k - 2) - g.edge_count)


# Fixed edge irregular total 5-labelling of K5: the deterministic output of the
# exact solver at k=5, embedded as a constant and pinned by a regeneration test.
_K5_VERTEX_LABELS = (1, 1, 1, 2, 5)
_K5_EDGE_LABELS = {
    (0, 1): 1,
    (0, 2): 2,
    (0, 3): 2,
    (0, 4): 3,
    (1, 2): 4,
    (1, 3): 4,
    (1, 4): 4,
    (2, 3): 5,
    (2, 4): 5,
    (3, 4): 5,
}


def k5_graph() -> Graph:
    return from_edge_list(5, combinations(range(5), 2))


def k5_labelling() -> TotalLabelling:
    """A verified edge irregular total 5-labelling of the complete graph on 5 vertices."""
    return TotalLabelling(_K5_VERTEX_LABELS, dict(_K5_EDGE_LABELS), 5)


def _partition_for(g: Graph, style: str = "leaves", b_style: str = "near") -> VertexPartition:
    """Partition for any connected graph: computed on a BFS spanning tree,
    rooted at a maximum-degree vertex of the full graph."""
    tree_edges, _ = spanning_decomposition(g)
    tree = Graph(g.vertex_count, tuple(sorted(tree_edges)))
    return partition_tree(tree, root=max_degree_vertex(g), style=style, b_style=b_style)


def _construct_connected_cert(
    g: Graph, kappa: int, *, weight_floor: int = 3, packed_first: bool = False
) -> TotalLabelling | None:
    """Plan-ladder labelling of a connected graph; None when every layout fails."""
    if g.edge_count == 1:
        return _single_edge_cert(kappa, weight_floor)
    for b_style, style in PARTITION_VARIANTS:
        try:
            partition = _partition_for(g, style, b_style)
            return ladder_label(g, partition, kappa, weight_floor=weight_floor, packed_first=packed_first)
        except InfeasiblePlanError:
            continue
    return None


def _single_edge_cert(kappa: int, weight_floor: int) -> TotalLabelling | None:
    target = max(3, weight_floor)
    if target > 3 * kappa:
        return None
    a = max(1, target - 2 * kappa)
    b = max(1, min(kappa, target - a - kappa))
    e = target - a - b
    return TotalLabelling((a, b), {(0, 1): e}, kappa)


def augment_once(
    g: Graph, partition: VertexPartition, labelling: TotalLabelling, e: Edge
) -> tuple[Graph, TotalLabelling]:
    """Label g plus one extra edge at the declared value of the larger graph.

    The layout is re-derived from scratch on the augmented graph rather than
    patched locally; when no layout realizes, the exact solver is consulted at
    the declared value and a failure there raises ConjectureViolationError.
    """
    g2 = g.with_edge(e)
    k2 = declared_tes(g2)
    cert = _construct_connected_cert(g2, k2)
    if cert is None:
        found = exists_labelling(g2, k2)
        if not found:
            raise ConjectureViolationError(g2, k2, "edge augmentation")
        cert = found
    return g2, cert


def label_connected(g: Graph) -> TesResult:
    """Labelling of a connected graph at its declared value.

    Route: spanning tree first, then one augmentation step per extra edge in
    canonical order, re-planning each time.  Intermediate prefixes whose plan
    ladder fails are counted as fallback steps; only the final graph is ever
    handed to the exact solver.
    """
    if g.edge_count == 0:
        raise GraphError("label_connected requires at least one edge")
    if not is_connected(g):
        raise GraphError("label_connected requires a connected graph")
    if is_k5_core(g):
        raise GraphError("the complete graph on 5 vertices is handled by k5_labelling")

    value = declared_tes(g)

    if is_tree(g):
        try:
            cert = label_tree(g)
            return TesResult(value, cert, METHOD_TREE, fallback_used=False)
        except InfeasiblePlanError:
            found = exists_labelling(g, value)
            if not found:
                raise ConjectureViolationError(g, value, "tree construction")
            return TesResult(value, found, METHOD_EXACT, fallback_used=True)

    tree_edges, extras = spanning_decomposition(g)
    cur = Graph(g.vertex_count, tuple(sorted(tree_edges)))
    fallback_any = False
    try:
        label_tree(cur)
    except InfeasiblePlanError:
        fallback_any = True

    cert = None
    for idx, e in enumerate(extras):
        cur = cur.with_edge(e)
        k_cur = declared_tes(cur)
        step_cert = _construct_connected_cert(cur, k_cur)
        if idx == len(extras) - 1:
            if step_cert is None:
                found = exists_labelling(cur, k_cur)
                if not found:
                    raise ConjectureViolationError(cur, k_cur, "edge augmentation")
                return TesResult(value, found, METHOD_EXACT, fallback_used=True)
            cert = step_cert
        elif step_cert is None:
            fallback_any = True
    return TesResult(value, cert, METHOD_AUGMENT, fallback_used=fallback_any)


def _induced_subgraph(g: Graph, vertices: list[int]) -> tuple[Graph, list[int]]:
    index = {v: i for i, v in enumerate(vertices)}
    inside = set(vertices)
    edges = [(index[u], index[v]) for u, v in g.edges if u in inside and v in inside]
    return Graph(len(vertices), tuple(sorted(edges))), vertices


def _uniform_shift(cert: TotalLabelling, p: int, q: int, bound: int) -> TotalLabelling:
    vl = tuple(x + p for x in cert.vertex_labels)
    el = {e: lbl + q for e, lbl in cert.edge_labels.items()}
    return TotalLabelling(vl, el, bound)


def _component_order(g: Graph, comps: list[list[int]]) -> list[list[int]]:
    """K5 components first; then the max-degree carrier when the degree bound
    dominates; then remaining components by decreasing edge count."""
    degs = degrees(g)
    delta = max(degs)
    m = g.edge_count
    degree_dominates = ceil_div(delta + 1, 2) > ceil_div(m + 2, 3)
    inside = {v: i for i, comp in enumerate(comps) for v in comp}
    delta_comp = inside[degs.index(delta)] if degree_dominates else None

    def key(item):
        i, comp = item
        members = set(comp)
        sub_m = sum(1 for u, _ in g.edges if u in members)
        sub_is_k5 = len(comp) == 5 and sub_m == 10
        rank = 0 if sub_is_k5 else (1 if i == delta_comp else 2)
        return (rank, -sub_m, comp[0])

    return [comp for _, comp in sorted(enumerate(comps), key=key)]


def label_disconnected(g: Graph) -> TesResult:
    """Labelling of a graph with any number of components at the declared value.

    Isolated vertices get label 1.  Edge-bearing components are labelled in
    order with stacked weight windows: each component's weights start just
    above the previous component's maximum, which keeps weights globally
    distinct.  Per component the attempts are: a standalone certificate
    shifted uniformly into the window, a fresh plan at the full bound with a
    weight floor, and finally exact search with the floor (flagged as
    fallback).  If stacking fails outright the whole graph goes to the exact
    solver once.
    """
    if g.edge_count == 0:
        raise GraphError("label_disconnected requires at least one edge")
    k = declared_tes(g)
    comps = [sorted(c) for c in connected_components(g)]
    edged = [c for c in comps if len(c) > 1]
    ordered = _component_order(g, edged)

    vertex_labels = [1] * g.vertex_count
    edge_labels: dict[Edge, int] = {}
    floor = 3
    fallback_any = False
    failed = False

    for comp in ordered:
        sub, mapping = _induced_subgraph(g, comp)
        cert = _label_component(sub, k, floor)
        if cert is None:
            found = exists_labelling(sub, k, weight_floor=floor)
            if found:
                cert = found
                fallback_any = True
            else:
                failed = True
                break
        for local, label in enumerate(cert.vertex_labels):
            vertex_labels[mapping[local]] = label
        for (lu, lv), lbl in cert.edge_labels.items():
            edge_labels[(mapping[lu], mapping[lv])] = lbl
        floor = max(weight_multiset(sub, cert)) + 1

    if failed:
        found = exists_labelling(g, k)
        if not found:
            raise ConjectureViolationError(g, k, "component composition")
        return TesResult(k, found, METHOD_EXACT, fallback_used=True)

    cert = TotalLabelling(tuple(vertex_labels), edge_labels, k)
    return TesResult(k, cert, METHOD_COMPOSITION, fallback_used=fallback_any)


def _label_component(sub: Graph, k: int, floor: int) -> TotalLabelling | None:
    """Constructive attempts for one component inside a stacked weight window."""
    shift = floor - 3
    lam = declared_tes(sub)

    standalone = None
    if is_k5_core(sub):
        standalone = k5_labelling()
    else:
        standalone = _construct_connected_cert(sub, lam, packed_first=True)

    if standalone is not None:
        if shift == 0:
            return standalone
        headroom = k - lam
        if headroom >= 0 and shift <= 3 * headroom:
            p = max(0, -(-(shift - headroom) // 2))
            q = shift - 2 * p
            if p <= headroom and 0 <= q <= headroom:
                return _uniform_shift(standalone, p, q, k)

    return _construct_connected_cert(sub, k, weight_floor=floor, packed_first=True)


def formula_only(g: Graph) -> TesResult:
    """Declared value without a certificate."""
    return TesResult(declared_tes(g), None, METHOD_FORMULA, fallback_used=False)


def label_graph(g: Graph) -> TesResult:
    """Route any graph with at least one edge to the right labeller."""
    if g.edge_count == 0:
        raise GraphError("label_graph requires at least one edge")
    if is_connected(g) and not is_k5_core(g):
        return label_connected(g)
    return label_disconnected(g)


def self_check(g: Graph, result: TesResult) -> bool:
    """True when the result's certificate verifies at its claimed value."""
    if result.certificate is None:
        return result.method == METHOD_FORMULA
    report = verify_irregular(g, result.certificate)
    return report.ok and result.certificate.bound_k == result.value
