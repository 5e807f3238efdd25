from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tesgraph.generate import prufer_to_edges
from tesgraph.graph import (
    EdgeClassSelector,
    Graph,
    GraphError,
    connected_components,
    cross_edges,
    degree,
    degrees,
    from_edge_list,
    is_tree,
    leaves,
    max_degree,
    spanning_decomposition,
)

from .conftest import complete_graph, cycle_graph, path_graph, star_graph


def test_from_edge_list_empty():
    g = from_edge_list(0, [])
    assert g.vertex_count == 0 and g.edges == ()


def test_from_edge_list_k5():
    g = from_edge_list(5, combinations(range(5), 2))
    assert g.edge_count == 10


def test_from_edge_list_canonicalizes():
    g = from_edge_list(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))


@pytest.mark.parametrize(
    "n,pairs",
    [
        (3, [(0, 1), (0, 1)]),
        (3, [(0, 1), (1, 0)]),
        (3, [(0, 0)]),
        (3, [(0, 3)]),
        (3, [(-1, 0)]),
    ],
)
def test_from_edge_list_rejects(n, pairs):
    with pytest.raises(GraphError):
        from_edge_list(n, pairs)


def test_degree_and_max_degree():
    k5 = complete_graph(5)
    assert all(degree(k5, v) == 4 for v in range(5))
    star = star_graph(4)
    assert degree(star, 0) == 4
    assert max_degree(path_graph(4)) == 2


def test_max_degree_empty_rejected():
    with pytest.raises(GraphError):
        max_degree(Graph(0, ()))


def test_connected_components():
    g = from_edge_list(6, combinations(range(5), 2))
    assert connected_components(g) == [{0, 1, 2, 3, 4}, {5}]
    assert connected_components(path_graph(4)) == [{0, 1, 2, 3}]
    assert connected_components(Graph(0, ())) == []


def test_is_tree_and_leaves():
    p4 = path_graph(4)
    assert is_tree(p4)
    assert leaves(p4) == {0, 3}
    assert not is_tree(cycle_graph(4))
    assert not is_tree(from_edge_list(4, [(0, 1), (2, 3)]))


def test_spanning_decomposition_tree():
    p4 = path_graph(4)
    tree, extra = spanning_decomposition(p4)
    assert sorted(tree) == list(p4.edges)
    assert extra == ()


def test_spanning_decomposition_c4():
    tree, extra = spanning_decomposition(cycle_graph(4))
    assert len(tree) == 3 and len(extra) == 1


def test_spanning_decomposition_k5():
    # cycle rank |E| - n + 1 = 10 - 5 + 1 = 6
    tree, extra = spanning_decomposition(complete_graph(5))
    assert len(tree) == 4 and len(extra) == 6
    assert sorted(tree + extra) == list(complete_graph(5).edges)


def test_spanning_decomposition_rejects_disconnected():
    with pytest.raises(GraphError):
        spanning_decomposition(from_edge_list(4, [(0, 1), (2, 3)]))


def test_cross_edges_all_and_empty():
    g = cycle_graph(4)
    everything = frozenset(range(4))
    assert cross_edges(g, EdgeClassSelector(everything, everything)) == g.edges
    assert cross_edges(g, EdgeClassSelector(frozenset({0}), frozenset({2}))) == ()


def test_cross_edges_three_way_partition_covers_tree():
    t = from_edge_list(10, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)])
    a, b, c = frozenset({4, 5, 7}), frozenset({0, 1, 2, 3}), frozenset({6, 8, 9})
    classes = [(a, a), (a, b), (b, b), (a, c), (b, c), (c, c)]
    total = sum(len(cross_edges(t, EdgeClassSelector(x, y))) for x, y in classes)
    assert total == t.edge_count == 9


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return from_edge_list(n, edges)


@st.composite
def trees(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n <= 2:
        return from_edge_list(n, [(0, 1)] if n == 2 else [])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return from_edge_list(n, prufer_to_edges(seq, n))


@given(graphs())
def test_degree_sum_is_twice_edges(g):
    assert sum(degrees(g)) == 2 * g.edge_count


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    seen = [v for comp in comps for v in comp]
    assert sorted(seen) == list(range(g.vertex_count))
    lookup = {v: i for i, comp in enumerate(comps) for v in comp}
    for u, v in g.edges:
        assert lookup[u] == lookup[v]


@given(trees(min_n=2, max_n=9))
def test_spanning_decomposition_identity_on_connected(t):
    tree, extra = spanning_decomposition(t)
    assert sorted(tree + extra) == list(t.edges)
    assert len(tree) == t.vertex_count - 1
    assert len(extra) == t.edge_count - t.vertex_count + 1
    assert is_tree(Graph(t.vertex_count, tuple(sorted(tree))))
