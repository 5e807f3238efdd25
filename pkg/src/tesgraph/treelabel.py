"""Constructive labelling of trees through a low/mid/high vertex partition.

The construction splits the vertices of a rooted tree into three classes
A, B, C (sizes floor((n+1)/3), n - 2*floor((n+1)/3), floor((n+1)/3)),
pins A-vertices to a low label and C-vertices to a high label, assigns every
edge a distinct target weight arranged in class blocks (A-side blocks at the
bottom of the weight range, C-side blocks at the top, B/AC edges in between),
and then searches for B-vertex labels that realize every target.

A single block layout is not always realizable, so the entry points walk a
deterministic ladder of layouts: the top-anchored layout first, then layouts
with the top anchor lowered step by step, then lowered high-class labels.
Every returned labelling is exact for the layout that produced it; callers
fall back to exact search only when the whole ladder fails.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping

from tesgraph.bounds import tree_lambda
from tesgraph.graph import (
    Edge,
    Graph,
    GraphError,
    adjacency,
    bfs_order,
    is_tree,
    leaves,
    max_degree_vertex,
)
from tesgraph.labelling import TotalLabelling

REALIZE_NODE_CAP = 200_000

# layout fallback order: the default partition first, then variants that
# concentrate A edges or move far vertices into B
PARTITION_VARIANTS = (("near", "leaves"), ("near", "subtree"), ("far", "leaves"), ("far", "subtree"))


class InfeasiblePlanError(Exception):
    """A weight plan (or its realization search) cannot be completed.

    When raised from the realization search, `partial` carries the B-vertex
    labels assigned so far.
    """

    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = partial or {}


@dataclass(frozen=True)
class VertexPartition:
    """The A/B/C split of a tree's vertices; the root sits in B."""

    set_a: frozenset[int]
    set_b: frozenset[int]
    set_c: frozenset[int]
    root: int

    def vertex_class(self, v: int) -> str:
        if v in self.set_a:
            return "A"
        if v in self.set_b:
            return "B"
        return "C"


@dataclass(frozen=True)
class WeightPlan:
    """Per-edge target weights plus the block geometry that produced them."""

    targets: Mapping[Edge, int]
    intervals: Mapping[str, tuple[int, int]]
    alpha: int
    gamma: int
    kappa: int
    bottom: int
    top: int


def partition_tree(
    t: Graph, root: int | None = None, style: str = "leaves", b_style: str = "near"
) -> VertexPartition:
    """Split a tree into the A/B/C classes.

    B holds the root (a maximum-degree vertex unless overridden); with
    b_style "near" it is filled with the root's neighbours and then the
    nearest BFS vertices, with "far" it takes the farthest BFS vertices
    instead.  With the default "leaves" style, A prefers leaves far from
    the root plus their neighbours, topped up with the farthest remaining
    vertices; the "subtree" style instead grows A as parent chains from the
    deepest leaves, which concentrates edges inside A.  C takes the rest.
    """
    if not is_tree(t):
        raise GraphError("partition_tree requires a tree")
    n = t.vertex_count
    if n < 3:
        raise GraphError("partition_tree requires at least 3 vertices")
    if style not in ("leaves", "subtree"):
        raise GraphError(f"unknown partition style {style!r}")
    if b_style not in ("near", "far"):
        raise GraphError(f"unknown B style {b_style!r}")
    adj = adjacency(t)
    if root is None:
        root = max_degree_vertex(t)
    order = bfs_order(t, root, adj)
    pos = {v: i for i, v in enumerate(order)}
    parent: dict[int, int] = {root: root}
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v

    size_ac = (n + 1) // 3
    size_b = n - 2 * size_ac

    placed: set[int] = set()
    set_b: list[int] = [root]
    placed.add(root)
    if b_style == "near":
        for w in adj[root]:
            if len(set_b) >= size_b:
                break
            set_b.append(w)
            placed.add(w)
        for v in order:
            if len(set_b) >= size_b:
                break
            if v not in placed:
                set_b.append(v)
                placed.add(v)
    else:
        for v in reversed(order):
            if len(set_b) >= size_b:
                break
            if v not in placed:
                set_b.append(v)
                placed.add(v)

    set_a: list[int] = []
    if style == "leaves":
        leaf_set = leaves(t)
        free_leaves = sorted((v for v in leaf_set if v not in placed), key=lambda v: -pos[v])
        quota = min(len(free_leaves) // 2, size_ac)
        for v in free_leaves[:quota]:
            set_a.append(v)
            placed.add(v)
        for v in list(set_a):
            if len(set_a) >= size_ac:
                break
            for w in adj[v]:
                if len(set_a) >= size_ac:
                    break
                if w not in placed:
                    set_a.append(w)
                    placed.add(w)
        for v in sorted((v for v in order if v not in placed), key=lambda v: -pos[v]):
            if len(set_a) >= size_ac:
                break
            set_a.append(v)
            placed.add(v)
    else:
        for v in reversed(order):
            if len(set_a) >= size_ac:
                break
            w = v
            while w not in placed and len(set_a) < size_ac:
                set_a.append(w)
                placed.add(w)
                w = parent[w]

    set_c = [v for v in order if v not in placed]
    return VertexPartition(frozenset(set_a), frozenset(set_b), frozenset(set_c), root)


def _class_map(g: Graph, partition: VertexPartition) -> list[str]:
    cls = ["C"] * g.vertex_count
    for v in partition.set_a:
        cls[v] = "A"
    for v in partition.set_b:
        cls[v] = "B"
    return cls


def _edge_classes(g: Graph, cls: list[str]) -> dict[str, list[Edge]]:
    buckets: dict[str, list[Edge]] = {"AA": [], "AB": [], "AC": [], "BB": [], "BC": [], "CC": []}
    for u, v in g.edges:
        key = "".join(sorted((cls[u], cls[v])))
        buckets[key].append((u, v))
    return buckets


def _b_positions(g: Graph, partition: VertexPartition) -> dict[int, int]:
    order = bfs_order(g, partition.root)
    return {v: i for i, v in enumerate(order)}


def build_weight_plan(
    g: Graph,
    partition: VertexPartition,
    lam: int,
    *,
    weight_floor: int = 3,
    top: int | None = None,
    alpha: int = 1,
    gamma: int | None = None,
) -> WeightPlan:
    """Assign each edge a distinct target weight, arranged in class blocks.

    Blocks, bottom to top: AA, AB, then the middle gap shared by BB and AC
    edges, then CB, then CC ending at `top`.  Within AA and CC the targets
    follow canonical edge order; AB and CB edges are grouped by the BFS
    position of their B endpoint; BB and AC take the smallest middle values
    in canonical order, except that AC edges are kept inside the weight
    window their fixed endpoint labels allow.
    """
    kappa = lam
    if gamma is None:
        gamma = kappa
    if top is None:
        top = 3 * kappa
    bottom = weight_floor
    m = g.edge_count
    if m > top - bottom + 1:
        raise InfeasiblePlanError(f"{m} edges but only {top - bottom + 1} target weights available")
    if top > 3 * kappa or bottom < 3:
        raise InfeasiblePlanError("weight window outside the representable range")

    cls = _class_map(g, partition)
    buckets = _edge_classes(g, cls)
    n_aa, n_ab, n_ac = len(buckets["AA"]), len(buckets["AB"]), len(buckets["AC"])
    n_bb, n_cb, n_cc = len(buckets["BB"]), len(buckets["BC"]), len(buckets["CC"])

    aa_lo, aa_hi = bottom, bottom + n_aa - 1
    ab_lo, ab_hi = aa_hi + 1, aa_hi + n_ab
    cc_lo, cc_hi = top - n_cc + 1, top
    cb_lo, cb_hi = cc_lo - n_cb, cc_lo - 1
    gap_lo, gap_hi = ab_hi + 1, cb_lo - 1

    if gap_hi - gap_lo + 1 < n_bb + n_ac:
        raise InfeasiblePlanError("middle gap too small for BB and AC edges")
    if n_aa and not (aa_lo - 2 * alpha >= 1 and aa_hi - 2 * alpha <= kappa):
        raise InfeasiblePlanError("AA block outside the label range")
    if n_cc and not (cc_lo - 2 * gamma >= 1 and cc_hi - 2 * gamma <= kappa):
        raise InfeasiblePlanError("CC block outside the label range")
    if n_ab and not (ab_lo >= alpha + 2 and ab_hi <= alpha + 2 * kappa):
        raise InfeasiblePlanError("AB block outside the label range")
    if n_cb and not (cb_lo >= gamma + 2 and cb_hi <= gamma + 2 * kappa):
        raise InfeasiblePlanError("CB block outside the label range")
    if n_bb and gap_hi > 3 * kappa:
        raise InfeasiblePlanError("BB block outside the label range")

    targets: dict[Edge, int] = {}
    for i, e in enumerate(buckets["AA"]):
        targets[e] = aa_lo + i
    for i, e in enumerate(buckets["CC"]):
        targets[e] = cc_lo + i

    pos = _b_positions(g, partition) if (n_ab or n_cb) else {}

    def b_endpoint(e: Edge) -> int:
        return e[0] if cls[e[0]] == "B" else e[1]

    for block_lo, edges_ in ((ab_lo, buckets["AB"]), (cb_lo, buckets["BC"])):
        ordered = sorted(edges_, key=lambda e: (pos[b_endpoint(e)], e))
        for i, e in enumerate(ordered):
            targets[e] = block_lo + i

    mid_edges = sorted(buckets["BB"] + buckets["AC"])
    ac_lo, ac_hi = alpha + gamma + 1, alpha + gamma + kappa
    naive = {e: gap_lo + i for i, e in enumerate(mid_edges)}
    ac_set = set(buckets["AC"])
    if all(ac_lo <= naive[e] <= ac_hi for e in ac_set):
        targets.update(naive)
    else:
        gap_values = list(range(gap_lo, gap_hi + 1))
        in_window = [w for w in gap_values if ac_lo <= w <= ac_hi]
        if len(in_window) < n_ac:
            raise InfeasiblePlanError("not enough middle weights inside the AC window")
        chosen = set(in_window[:n_ac])
        ac_iter = iter(sorted(chosen))
        rest_iter = iter(w for w in gap_values if w not in chosen)
        for e in mid_edges:
            targets[e] = next(ac_iter) if e in ac_set else next(rest_iter)

    intervals = {
        "AA": (aa_lo, aa_hi),
        "AB": (ab_lo, ab_hi),
        "MID": (gap_lo, gap_hi),
        "CB": (cb_lo, cb_hi),
        "CC": (cc_lo, cc_hi),
    }
    return WeightPlan(targets, intervals, alpha, gamma, kappa, bottom, top)


def _match_intervals(values: list[int], intervals: list[tuple[int, int, int]]) -> dict[int, int] | None:
    """Assign each interval (lo, hi, key) a distinct value from the sorted pool.

    Earliest-deadline greedy over ascending values: exact for interval
    constraints.  Returns key -> value, or None when no assignment exists.
    """
    if len(intervals) > len(values):
        return None
    pending = sorted(intervals, key=lambda iv: iv[0])
    heap: list[tuple[int, int]] = []
    out: dict[int, int] = {}
    p = 0
    for w in values:
        while p < len(pending) and pending[p][0] <= w:
            heapq.heappush(heap, (pending[p][1], pending[p][2]))
            p += 1
        if heap and heap[0][0] < w:
            return None
        if heap:
            _, key = heapq.heappop(heap)
            out[key] = w
    if heap or p < len(pending):
        return None
    return out


def realize_plan(g: Graph, partition: VertexPartition, plan: WeightPlan, lam: int) -> TotalLabelling:
    """Find vertex and edge labels hitting the plan's weight multiset exactly.

    A and C labels are fixed by the plan; AA and CC edges take their pinned
    targets directly.  The search runs over B-vertex labels in BFS order,
    trying nondecreasing values first.  Within the AB, CB and middle blocks
    the target-to-edge assignment is resolved by interval matching, with a
    Hall-style feasibility check (every block must be able to cover its
    remaining edges with reachable unused targets) pruning each search node.
    The realized weight multiset always equals the planned one.
    """
    kappa = lam
    alpha, gamma = plan.alpha, plan.gamma
    cls = _class_map(g, partition)
    vlabels: list[int | None] = [None] * g.vertex_count
    for v in range(g.vertex_count):
        if cls[v] == "A":
            vlabels[v] = alpha
        elif cls[v] == "C":
            vlabels[v] = gamma

    pinned: dict[Edge, int] = {}
    ab_edges: list[Edge] = []
    cb_edges: list[Edge] = []
    mid_edges: list[Edge] = []
    ab_pool: list[int] = []
    cb_pool: list[int] = []
    mid_pool: list[int] = []
    for e in g.edges:
        t = plan.targets[e]
        u, v = e
        key = "".join(sorted((cls[u], cls[v])))
        if key in ("AA", "CC"):
            implied = t - vlabels[u] - vlabels[v]
            if not (1 <= implied <= kappa):
                raise InfeasiblePlanError(f"edge {e} needs label {implied} outside [1, {kappa}]")
            pinned[e] = t
        elif key == "AB":
            ab_edges.append(e)
            ab_pool.append(t)
        elif key == "BC":
            cb_edges.append(e)
            cb_pool.append(t)
        else:  # BB or AC share the middle block
            mid_edges.append(e)
            mid_pool.append(t)
    ab_pool.sort()
    cb_pool.sort()
    mid_pool.sort()

    lo: dict[int, int] = {}
    hi: dict[int, int] = {}
    for b in partition.set_b:
        lo[b], hi[b] = 1, kappa
    # pool ranges bound each B label through its incident single-B edges
    for edges_, pool, fixed_label in ((ab_edges, ab_pool, alpha), (cb_edges, cb_pool, gamma)):
        if not pool:
            continue
        for u, v in edges_:
            b = u if cls[u] == "B" else v
            lo[b] = max(lo[b], pool[0] - fixed_label - kappa)
            hi[b] = min(hi[b], pool[-1] - fixed_label - 1)
            if lo[b] > hi[b]:
                raise InfeasiblePlanError(f"no feasible label for B vertex {b}")

    def bound(v: int) -> tuple[int, int]:
        fixed = vlabels[v]
        if fixed is not None:
            return fixed, fixed
        return lo[v], hi[v]

    def pools_feasible() -> bool:
        for edges_, pool in ((ab_edges, ab_pool), (cb_edges, cb_pool), (mid_edges, mid_pool)):
            if not edges_:
                continue
            intervals = []
            for i, (u, v) in enumerate(edges_):
                lo_u, hi_u = bound(u)
                lo_v, hi_v = bound(v)
                intervals.append((lo_u + lo_v + 1, hi_u + hi_v + kappa, i))
            if _match_intervals(pool, intervals) is None:
                return False
        return True

    order = [v for v in bfs_order(g, partition.root) if cls[v] == "B"]
    nodes = 0

    if not pools_feasible():
        raise InfeasiblePlanError("a weight block cannot cover its edges")

    def search(idx: int, prev: int) -> bool:
        nonlocal nodes
        if idx == len(order):
            return True
        b = order[idx]
        lo_b, hi_b = lo[b], hi[b]
        candidates = list(range(max(lo_b, prev), hi_b + 1)) + list(range(lo_b, min(hi_b, prev - 1) + 1))
        for val in candidates:
            nodes += 1
            if nodes > REALIZE_NODE_CAP:
                raise InfeasiblePlanError("search node cap exceeded")
            vlabels[b] = val
            if pools_feasible() and search(idx + 1, val):
                return True
            vlabels[b] = None
        return False

    if order and not search(0, 1):
        raise InfeasiblePlanError("no B labelling realizes the plan")

    edge_labels: dict[Edge, int] = {}
    targets = dict(pinned)
    for edges_, pool in ((ab_edges, ab_pool), (cb_edges, cb_pool), (mid_edges, mid_pool)):
        if not edges_:
            continue
        intervals = []
        for i, (u, v) in enumerate(edges_):
            intervals.append((vlabels[u] + vlabels[v] + 1, vlabels[u] + vlabels[v] + kappa, i))
        match = _match_intervals(pool, intervals)
        if match is None:
            raise InfeasiblePlanError("final block matching failed")
        for i, w in match.items():
            targets[edges_[i]] = w
    for e in g.edges:
        implied = targets[e] - vlabels[e[0]] - vlabels[e[1]]
        if not (1 <= implied <= kappa):
            raise InfeasiblePlanError(f"edge {e} realized outside the label range")
        edge_labels[e] = implied
    return TotalLabelling(tuple(vlabels), edge_labels, kappa)


def _alpha_candidates(bottom: int, kappa: int, buckets: dict[str, list[Edge]]) -> list[int]:
    n_aa, n_ab = len(buckets["AA"]), len(buckets["AB"])
    if n_aa:
        # AA weights are 2*alpha + label, so the whole AA block pins alpha tightly
        a_lo = max(1, -(-(bottom + n_aa - 1 - kappa) // 2))
        a_hi = min(kappa, (bottom - 1) // 2)
    elif n_ab:
        a_lo = max(1, bottom + n_ab - 1 - 2 * kappa)
        a_hi = min(kappa, bottom - 2)
    else:
        a_lo, a_hi = 1, kappa
    if a_lo > a_hi:
        return []
    cand = list(range(a_lo, a_hi + 1))
    if len(cand) > 6:
        # spread across the range, endpoints included
        step = (len(cand) - 1) / 5
        cand = sorted({cand[round(i * step)] for i in range(6)})
    return cand


def ladder_label(
    g: Graph,
    partition: VertexPartition,
    kappa: int,
    *,
    weight_floor: int = 3,
    packed_first: bool = False,
) -> TotalLabelling:
    """Label a graph by walking plan layouts until one realizes.

    Standalone labelling (weight_floor == 3) tries the top-anchored layout
    first and lowers the anchor on failure; floored labelling (used when
    stacking component weight windows) packs targets tightly first and
    raises the anchor on failure.
    """
    m = g.edge_count
    bottom = weight_floor
    cls = _class_map(g, partition)
    buckets = _edge_classes(g, cls)
    n_cc, n_cb = len(buckets["CC"]), len(buckets["BC"])
    last: InfeasiblePlanError | None = None

    for alpha in _alpha_candidates(bottom, kappa, buckets) or [1]:
        for gamma in range(kappa, max(1, kappa - 4) - 1, -1):
            if gamma < alpha:
                continue
            top_cap = 3 * kappa
            if n_cc:
                top_cap = min(top_cap, 2 * gamma + kappa)
            if n_cb:
                top_cap = min(top_cap, gamma + 2 * kappa + n_cc)
            top_min = bottom + m - 1
            if top_cap < top_min:
                continue
            tops = range(top_min, top_cap + 1) if packed_first else range(top_cap, top_min - 1, -1)
            for top in tops:
                try:
                    plan = build_weight_plan(
                        g, partition, kappa, weight_floor=bottom, top=top, alpha=alpha, gamma=gamma
                    )
                    return realize_plan(g, partition, plan, kappa)
                except InfeasiblePlanError as exc:
                    last = exc
    raise InfeasiblePlanError(f"no feasible layout at bound {kappa}: {last}")


def label_tree(t: Graph) -> TotalLabelling:
    """Edge irregular total labelling of a tree at its exact strength value."""
    if not is_tree(t):
        raise GraphError("label_tree requires a tree")
    if t.edge_count == 0:
        raise GraphError("label_tree requires at least one edge")
    if t.vertex_count == 2:
        return TotalLabelling((1, 1), {(0, 1): 1}, 1)
    lam = tree_lambda(t)
    last: InfeasiblePlanError | None = None
    for b_style, style in PARTITION_VARIANTS:
        try:
            return ladder_label(t, partition_tree(t, style=style, b_style=b_style), lam)
        except InfeasiblePlanError as exc:
            last = exc
    raise InfeasiblePlanError(f"no partition style labels this tree at {lam}: {last}")
