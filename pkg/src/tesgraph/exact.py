"""Exact decision and optimization of the irregularity strength by branch-and-prune.

The search assigns labels edge by edge (vertex labels are decided lazily when
the first incident edge comes up), tracks the set of used weights, and prunes
on weight collisions, per-edge reachable weight intervals, and a global count
of remaining weights.  Without a node budget the search is complete.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from tesgraph.bounds import ceil_div
from tesgraph.graph import Graph, GraphError, degrees
from tesgraph.labelling import TotalLabelling
from tesgraph.result import METHOD_EXACT, TesResult


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int | None = None
    parallel: bool = False
    symmetry_reduction: bool = True


class _BudgetExhausted:
    """Sentinel result: the node budget ran out before the search finished."""

    def __repr__(self) -> str:
        return "BUDGET_EXHAUSTED"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        # keep identity checks valid across process boundaries
        return (_budget_exhausted, ())


def _budget_exhausted() -> "_BudgetExhausted":
    return BUDGET_EXHAUSTED


BUDGET_EXHAUSTED = _BudgetExhausted()


class SearchBudgetError(Exception):
    """exact_tes ran out of budget; `k` is the bound being attempted."""

    def __init__(self, k: int):
        super().__init__(f"search budget exhausted while deciding k={k}")
        self.k = k


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    degs = degrees(g)
    return sorted(g.edges, key=lambda e: (-min(degs[e[0]], degs[e[1]]), e))


def _swap_symmetric(g: Graph) -> bool:
    """Cheap vertex-transitivity test: complete graphs and cycles only."""
    n = g.vertex_count
    m = g.edge_count
    degs = degrees(g)
    if n < 2 or len(set(degs)) != 1:
        return False
    return m == n * (n - 1) // 2 or (degs[0] == 2 and m == n)


class _Searcher:
    """One complete branch-and-prune run at a fixed bound k."""

    def __init__(self, n, edges, k, weight_floor, budget, symmetric_first):
        self.n = n
        self.edges = edges
        self.m = len(edges)
        self.k = k
        self.floor = weight_floor
        self.budget = budget
        self.symmetric_first = symmetric_first
        self.w_hi = 3 * k
        self.vl = [0] * n
        self.el = [0] * self.m
        self.used = [False] * (self.w_hi + 1)
        self.unused = max(0, self.w_hi - weight_floor + 1)
        self.nodes = 0

    def seed_first_edge(self, fu: int, fv: int, fe: int) -> bool:
        u, v = self.edges[0]
        w = fu + fv + fe
        if w < self.floor or w > self.w_hi:
            return False
        self.vl[u], self.vl[v] = fu, fv
        self.el[0] = fe
        self.used[w] = True
        self.unused -= 1
        return True

    def _remaining_reachable(self, i: int) -> bool:
        # Hall-style interval relaxation: every remaining edge spans a weight
        # interval from its decided / undecided endpoint bounds; the unused
        # weights must admit a system of distinct representatives, checked by
        # the earliest-deadline greedy over ascending unused weights
        vl, k, used, floor = self.vl, self.k, self.used, self.floor
        intervals = []
        for j in range(i, self.m):
            u, v = self.edges[j]
            fu, fv = vl[u], vl[v]
            lo = max((fu or 1) + (fv or 1) + 1, floor)
            hi = (fu or k) + (fv or k) + k
            if lo > hi:
                return False
            intervals.append((lo, hi))
        if not intervals:
            return True
        intervals.sort()
        heap: list[int] = []
        p = 0
        matched = 0
        need = len(intervals)
        for w in range(floor, self.w_hi + 1):
            if used[w]:
                continue
            while p < need and intervals[p][0] <= w:
                heapq.heappush(heap, intervals[p][1])
                p += 1
            if heap:
                if heap[0] < w:
                    return False
                heapq.heappop(heap)
                matched += 1
                if matched == need:
                    return True
        return not heap and p == need and matched == need

    def extend(self, i: int):
        """Returns True on success, False on exhausted subtree, or the budget sentinel."""
        if i == self.m:
            return True
        if self.unused < self.m - i:
            return False
        u, v = self.edges[i]
        k = self.k
        vl, used = self.vl, self.used
        fu_fixed, fv_fixed = vl[u], vl[v]
        for fu in ((fu_fixed,) if fu_fixed else range(1, k + 1)):
            for fv in ((fv_fixed,) if fv_fixed else range(1, k + 1)):
                if i == 0 and self.symmetric_first and fu > fv:
                    continue
                base = fu + fv
                for fe in range(1, k + 1):
                    w = base + fe
                    if w < self.floor or w > self.w_hi or used[w]:
                        continue
                    self.nodes += 1
                    if self.budget is not None and self.nodes > self.budget:
                        return BUDGET_EXHAUSTED
                    vl[u], vl[v] = fu, fv
                    self.el[i] = fe
                    used[w] = True
                    self.unused -= 1
                    if self._remaining_reachable(i + 1):
                        result = self.extend(i + 1)
                        if result is True:
                            return True
                        if result is BUDGET_EXHAUSTED:
                            used[w] = False
                            self.unused += 1
                            vl[u], vl[v] = fu_fixed, fv_fixed
                            return BUDGET_EXHAUSTED
                    used[w] = False
                    self.unused += 1
            vl[v] = fv_fixed
        vl[u] = fu_fixed
        return False


def _run(n, edges, k, weight_floor, budget, symmetric_first, seed=None):
    searcher = _Searcher(n, edges, k, weight_floor, budget, symmetric_first)
    if seed is not None:
        if not searcher.seed_first_edge(*seed):
            return None
        if not searcher._remaining_reachable(1):
            return None
        outcome = searcher.extend(1)
    else:
        outcome = searcher.extend(0)
    if outcome is True:
        return searcher.vl, searcher.el
    return outcome if outcome is BUDGET_EXHAUSTED else None


def _branch_worker(args):
    n, edges, k, weight_floor, budget, seed = args
    return _run(n, edges, k, weight_floor, budget, False, seed)


def _parallel_exists(n, edges, k, weight_floor, cfg, symmetric_first):
    from concurrent.futures import ProcessPoolExecutor

    branches = []
    for fu in range(1, k + 1):
        for fv in range(1, k + 1):
            if symmetric_first and fu > fv:
                continue
            for fe in range(1, k + 1):
                branches.append((n, edges, k, weight_floor, cfg.node_budget, (fu, fv, fe)))
    # branches are listed in the sequential try order, so scanning the mapped
    # results in order reproduces the sequential certificate exactly
    with ProcessPoolExecutor() as pool:
        results = list(pool.map(_branch_worker, branches, chunksize=max(1, len(branches) // 16)))
    for res in results:
        if res is BUDGET_EXHAUSTED:
            return BUDGET_EXHAUSTED
        if res is not None:
            return res
    return None


def _complete_isolated(vl: list[int]) -> tuple[int, ...]:
    # vertices that never met an edge keep label 1
    return tuple(x if x else 1 for x in vl)


def exists_labelling(
    g: Graph,
    k: int,
    cfg: SearchConfig | None = None,
    *,
    weight_floor: int = 3,
):
    """Find an edge irregular total k-labelling, prove none exists, or give up.

    Returns a TotalLabelling, None (definitive when no budget is set), or
    BUDGET_EXHAUSTED.  `weight_floor` restricts all weights to
    [weight_floor, 3k]; the default of 3 imposes nothing.
    """
    if g.edge_count == 0:
        raise GraphError("exists_labelling requires at least one edge")
    if k < 1:
        raise GraphError("k must be positive")
    cfg = cfg or SearchConfig()
    edges = _edge_order(g)
    symmetric_first = cfg.symmetry_reduction and _swap_symmetric(g)

    if cfg.parallel:
        outcome = _parallel_exists(g.vertex_count, edges, k, weight_floor, cfg, symmetric_first)
    else:
        outcome = _run(g.vertex_count, edges, k, weight_floor, cfg.node_budget, symmetric_first)

    if outcome is None or outcome is BUDGET_EXHAUSTED:
        return outcome
    vl, el = outcome
    labels = {e: el[i] for i, e in enumerate(edges)}
    return TotalLabelling(_complete_isolated(vl), labels, k)


def exact_tes(g: Graph, cfg: SearchConfig | None = None) -> TesResult:
    """Smallest k admitting an edge irregular total k-labelling, with certificate.

    Starts at the larger of the two lower bounds and increments, so the first
    bound that admits a labelling is the exact value.
    """
    if g.edge_count == 0:
        raise GraphError("exact_tes requires at least one edge")
    cfg = cfg or SearchConfig()
    degs = degrees(g)
    k = max(ceil_div(g.edge_count + 2, 3), ceil_div(max(degs) + 1, 2))
    while True:
        found = exists_labelling(g, k, cfg)
        if found is BUDGET_EXHAUSTED:
            raise SearchBudgetError(k)
        if found is not None:
            return TesResult(value=k, certificate=found, method=METHOD_EXACT, fallback_used=False)
        k += 1
