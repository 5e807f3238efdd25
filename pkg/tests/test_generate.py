from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tesgraph.bounds import is_k5_core
from tesgraph.generate import (
    disjoint_union,
    enumerate_connected,
    enumerate_labelled_trees,
    gen_random_connected,
    gen_random_tree,
    prufer_to_edges,
    random_connected_universe,
    random_disconnected_universe,
)
from tesgraph.graph import GraphError, connected_components, from_edge_list, is_connected, is_tree


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)])
def test_tree_enumeration_counts(n, count):
    assert sum(1 for _ in enumerate_labelled_trees(n)) == count


def test_tree_enumeration_all_trees_distinct():
    seen = set()
    for t in enumerate_labelled_trees(5):
        assert is_tree(t)
        seen.add(t.edges)
    assert len(seen) == 125


def test_connected_enumeration_counts():
    by_n = {}
    for g in enumerate_connected(5):
        by_n[g.vertex_count] = by_n.get(g.vertex_count, 0) + 1
    assert by_n == {2: 1, 3: 4, 4: 38, 5: 728}


def test_connected_enumeration_unique_max_is_k5():
    ten_edge = [g for g in enumerate_connected(5) if g.edge_count == 10]
    assert len(ten_edge) == 1 and is_k5_core(ten_edge[0])


def test_connected_enumeration_cross_checked_by_component_filter():
    # independent connectivity filter: component count computed from scratch
    total = 0
    for g in enumerate_connected(4):
        assert len(connected_components(g)) == 1
        total += 1
    assert total == 1 + 4 + 38


def test_enumerate_connected_rejects_large_n():
    with pytest.raises(GraphError):
        list(enumerate_connected(6))


@given(st.integers(2, 40), st.integers(0, 2**63))
def test_random_tree_is_uniform_shape(n, seed):
    t = gen_random_tree(n, seed)
    assert is_tree(t) and t.vertex_count == n


def test_random_tree_deterministic():
    assert gen_random_tree(17, 99).edges == gen_random_tree(17, 99).edges
    assert gen_random_tree(17, 99).edges != gen_random_tree(17, 100).edges


def test_random_connected_shape_and_determinism():
    g = gen_random_connected(9, 15, 4)
    assert g.vertex_count == 9 and g.edge_count == 15 and is_connected(g)
    assert g.edges == gen_random_connected(9, 15, 4).edges


def test_random_connected_range_validation():
    with pytest.raises(GraphError):
        gen_random_connected(4, 2, 1)
    with pytest.raises(GraphError):
        gen_random_connected(4, 7, 1)


def test_prufer_rejects_bad_length():
    with pytest.raises(GraphError):
        prufer_to_edges([0], 4)


def test_random_connected_universe_excludes_k5():
    for gid, g in random_connected_universe(300, 6, 12, 31337, n_min=5):
        assert not is_k5_core(g), gid
        assert is_connected(g)


def test_random_disconnected_universe_components():
    for gid, g in random_disconnected_universe(30, 6, 8, 2020):
        comps = connected_components(g)
        assert 2 <= len(comps) <= 4, gid


def test_disjoint_union_offsets():
    a = from_edge_list(2, [(0, 1)])
    b = from_edge_list(3, [(0, 2)])
    u = disjoint_union([a, b])
    assert u.vertex_count == 5 and u.edges == ((0, 1), (2, 4))
