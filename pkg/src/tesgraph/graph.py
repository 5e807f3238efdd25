"""Simple undirected graph model with the structural queries the labellers need.

Vertices are dense integers 0..n-1.  Edges are stored canonically as (u, v)
with u < v, sorted lexicographically, which makes every downstream iteration
order deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(Exception):
    """Raised for malformed graphs or operations on unsupported inputs."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[Edge, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set()

    def _edge_set(self) -> frozenset[Edge]:
        # frozen dataclass: cache through object.__setattr__ on first use
        cached = self.__dict__.get("_edges_frozen")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edges_frozen", cached)
        return cached

    def with_edge(self, e: Edge) -> "Graph":
        """Return a new graph with one extra edge (validated)."""
        u, v = canonical_edge(e[0], e[1])
        _check_endpoint(self.vertex_count, u)
        _check_endpoint(self.vertex_count, v)
        if (u, v) in self._edge_set():
            raise GraphError(f"edge ({u}, {v}) already present")
        return Graph(self.vertex_count, tuple(sorted(self.edges + ((u, v),))))


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _check_endpoint(n: int, v: int) -> None:
    if not (0 <= v < n):
        raise GraphError(f"vertex {v} out of range for {n} vertices")


def from_edge_list(vertex_count: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from raw vertex pairs, canonicalizing and validating them."""
    if vertex_count < 0:
        raise GraphError("vertex_count must be non-negative")
    seen: set[Edge] = set()
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        _check_endpoint(vertex_count, u)
        _check_endpoint(vertex_count, v)
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
    return Graph(vertex_count, tuple(sorted(seen)))


def adjacency(g: Graph) -> list[list[int]]:
    """Adjacency lists with neighbours in ascending order."""
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    for nbrs in adj:
        nbrs.sort()
    return adj


def degree(g: Graph, v: int) -> int:
    """Number of edges incident to v."""
    _check_endpoint(g.vertex_count, v)
    return sum(1 for u, w in g.edges if u == v or w == v)


def degrees(g: Graph) -> list[int]:
    degs = [0] * g.vertex_count
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    return degs


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise GraphError("max_degree undefined on a graph with no vertices")
    return max(degrees(g))


def max_degree_vertex(g: Graph) -> int:
    """Vertex of maximum degree, smallest index on ties."""
    degs = degrees(g)
    best = max(degs)
    return degs.index(best)


def bfs_order(g: Graph, root: int, adj: list[list[int]] | None = None) -> list[int]:
    """BFS visit order from root, neighbours explored in ascending index order."""
    if adj is None:
        adj = adjacency(g)
    seen = [False] * g.vertex_count
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def connected_components(g: Graph) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest contained vertex."""
    adj = adjacency(g)
    seen = [False] * g.vertex_count
    comps: list[set[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_tree(g: Graph) -> bool:
    """True iff the graph is connected with exactly n-1 edges."""
    if g.vertex_count == 0:
        return False
    return g.edge_count == g.vertex_count - 1 and is_connected(g)


def leaves(g: Graph) -> set[int]:
    return {v for v, d in enumerate(degrees(g)) if d == 1}


def spanning_decomposition(g: Graph) -> tuple[tuple[Edge, ...], tuple[Edge, ...]]:
    """Split a connected graph into a BFS spanning tree plus the leftover edges.

    The tree is grown from the maximum-degree vertex (smallest index on ties),
    so the root keeps its full degree inside the tree.  Tree edges come out in
    discovery order, extras in canonical order.
    """
    if g.vertex_count == 0:
        raise GraphError("spanning_decomposition needs at least one vertex")
    if not is_connected(g):
        raise GraphError("spanning_decomposition requires a connected graph")
    root = max_degree_vertex(g)
    adj = adjacency(g)
    seen = [False] * g.vertex_count
    seen[root] = True
    tree: list[Edge] = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                tree.append(canonical_edge(u, w))
                queue.append(w)
    tree_set = set(tree)
    extras = tuple(e for e in g.edges if e not in tree_set)
    return tuple(tree), extras


@dataclass(frozen=True)
class EdgeClassSelector:
    """Selects edges with one endpoint in `left` and the other in `right`."""

    left: frozenset[int]
    right: frozenset[int]


def cross_edges(g: Graph, sel: EdgeClassSelector) -> tuple[Edge, ...]:
    """Edges between sel.left and sel.right, canonical order.

    With left == right this returns the edges internal to the set.
    """
    for v in sel.left | sel.right:
        _check_endpoint(g.vertex_count, v)
    out = []
    for u, v in g.edges:
        if (u in sel.left and v in sel.right) or (u in sel.right and v in sel.left):
            out.append((u, v))
    return tuple(out)
