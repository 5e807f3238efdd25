"""Graph generators and enumerators: the test universes for the scan harness.

Labelled trees are enumerated and sampled through Pruefer sequences (the
length-(n-2) code bijective with labelled trees); connected graphs on up to
5 vertices are enumerated as connected edge subsets of the complete graph.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

from tesgraph.bounds import is_k5_core
from tesgraph.graph import Edge, Graph, GraphError, from_edge_list, is_connected
from tesgraph.rng import SplitMix64


def prufer_to_edges(seq: list[int], n: int) -> list[Edge]:
    """Decode a Pruefer sequence over 0..n-1 into the edges of a labelled tree."""
    if n < 2:
        raise GraphError("a Pruefer decoding needs at least 2 vertices")
    if len(seq) != n - 2:
        raise GraphError(f"sequence length must be {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: list[Edge] = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        degree[leaf] = 0
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            leaf = -1
    u = degree.index(1)
    v = degree.index(1, u + 1)
    edges.append((u, v))
    return edges


def enumerate_labelled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labelled trees on n vertices, in lexicographic sequence order."""
    if n < 1:
        raise GraphError("n must be at least 1")
    if n == 1:
        yield Graph(1, ())
        return
    if n == 2:
        yield Graph(2, ((0, 1),))
        return
    for seq in product(range(n), repeat=n - 2):
        yield Graph(n, tuple(sorted(prufer_to_edges(list(seq), n))))


def enumerate_connected(n_max: int = 5) -> Iterator[Graph]:
    """All connected graphs with at least one edge on 2..n_max vertices.

    Every edge subset of the complete graph is tested; duplicates by
    isomorphism are kept (the universe is labelled graphs).
    """
    if n_max > 5:
        raise GraphError("edge-subset enumeration is limited to 5 vertices")
    for n in range(2, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1, 1 << len(pairs)):
            edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
            g = Graph(n, edges)
            if is_connected(g):
                yield g


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree via a uniform Pruefer sequence."""
    if n < 1:
        raise GraphError("n must be at least 1")
    rng = SplitMix64(seed)
    return _random_tree(n, rng)


def _random_tree(n: int, rng: SplitMix64) -> Graph:
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    seq = [rng.randint(n) for _ in range(n - 2)]
    return Graph(n, tuple(sorted(prufer_to_edges(seq, n))))


def gen_random_connected(n: int, m: int, seed: int) -> Graph:
    """Random connected graph: a random spanning tree plus uniform extra edges."""
    rng = SplitMix64(seed)
    return _random_connected(n, m, rng)


def _random_connected(n: int, m: int, rng: SplitMix64) -> Graph:
    if n < 1:
        raise GraphError("n must be at least 1")
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise GraphError(f"m={m} outside [{n - 1}, {n * (n - 1) // 2}] for n={n}")
    tree = _random_tree(n, rng)
    tree_set = set(tree.edges)
    rest = [e for e in combinations(range(n), 2) if e not in tree_set]
    rng.shuffle(rest)
    extra = rest[: m - (n - 1)]
    return Graph(n, tuple(sorted(tree.edges + tuple(extra))))


def random_connected_universe(
    count: int, n_max: int, m_max: int, seed: int, *, n_min: int = 2, exclude_k5: bool = True
) -> Iterator[tuple[str, Graph]]:
    """Stream of (graph_id, graph): seeded random connected graphs.

    Draws that come out as the complete graph on 5 vertices are redrawn when
    excluded, so the stream length is always `count`.
    """
    rng = SplitMix64(seed)
    for i in range(count):
        while True:
            n = n_min + rng.randint(n_max - n_min + 1)
            hi = min(m_max, n * (n - 1) // 2)
            lo = n - 1
            m = lo + rng.randint(hi - lo + 1)
            g = _random_connected(n, m, rng)
            if not (exclude_k5 and is_k5_core(g)):
                break
        yield f"random-connected-s{seed}-{i:04d}", g


def random_disconnected_universe(
    count: int, n_max: int, m_max: int, seed: int, *, components=(2, 4)
) -> Iterator[tuple[str, Graph]]:
    """Stream of seeded random disjoint unions of 2..4 connected components."""
    rng = SplitMix64(seed)
    lo_c, hi_c = components
    for i in range(count):
        parts = []
        n_parts = lo_c + rng.randint(hi_c - lo_c + 1)
        for _ in range(n_parts):
            while True:
                n = 2 + rng.randint(n_max - 1)
                hi = min(m_max, n * (n - 1) // 2)
                m = (n - 1) + rng.randint(hi - (n - 1) + 1)
                g = _random_connected(n, m, rng)
                if not is_k5_core(g):
                    break
            parts.append(g)
        yield f"random-disconnected-s{seed}-{i:04d}", disjoint_union(parts)


def disjoint_union(parts: list[Graph]) -> Graph:
    offset = 0
    edges: list[Edge] = []
    for g in parts:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return from_edge_list(offset, edges)
