from __future__ import annotations

import pytest
from hypothesis import given, settings

from tesgraph.bounds import tree_lambda
from tesgraph.generate import enumerate_labelled_trees, gen_random_tree
from tesgraph.graph import GraphError, bfs_order
from tesgraph.labelling import verify_irregular, weight_multiset
from tesgraph.rng import SplitMix64
from tesgraph.treelabel import (
    InfeasiblePlanError,
    build_weight_plan,
    label_tree,
    partition_tree,
    realize_plan,
)

from .conftest import cycle_graph, path_graph, star_graph
from .test_graph import trees


def test_partition_sizes_t10(t10):
    p = partition_tree(t10)
    assert (len(p.set_a), len(p.set_b), len(p.set_c)) == (3, 4, 3)
    assert p.root in p.set_b


def test_partition_sizes_p4(p4):
    p = partition_tree(p4)
    assert (len(p.set_a), len(p.set_b), len(p.set_c)) == (1, 2, 1)


def test_partition_star_overflow():
    # 9 leaves cannot all sit next to the root inside B; sizes still hold
    star = star_graph(9)
    p = partition_tree(star)
    assert (len(p.set_a), len(p.set_b), len(p.set_c)) == (3, 4, 3)
    lab = label_tree(star)
    assert verify_irregular(star, lab).ok
    assert lab.bound_k == tree_lambda(star)


def test_partition_rejects_non_tree_and_small():
    with pytest.raises(GraphError):
        partition_tree(cycle_graph(4))
    with pytest.raises(GraphError):
        partition_tree(path_graph(2))


def test_plan_blocks_t8(t8):
    # 7 edges at lambda=3 fill the whole weight interval [3, 9]
    lam = tree_lambda(t8)
    p = partition_tree(t8)
    plan = build_weight_plan(t8, p, lam)
    assert sorted(plan.targets.values()) == list(range(3, 3 * lam + 1))


def test_plan_first_aa_edge_gets_three(t8):
    p = partition_tree(t8)
    plan = build_weight_plan(t8, p, tree_lambda(t8))
    aa = [e for e in t8.edges if e[0] in p.set_a and e[1] in p.set_a]
    if aa:
        assert min(plan.targets[e] for e in aa) == 3


def test_plan_top_block_reaches_top(t10):
    lam = tree_lambda(t10)
    p = partition_tree(t10)
    plan = build_weight_plan(t10, p, lam)
    cc = [e for e in t10.edges if e[0] in p.set_c and e[1] in p.set_c]
    if cc:
        assert max(plan.targets[e] for e in cc) == 3 * lam


def test_plan_overflow_rejected(t8):
    p = partition_tree(t8)
    with pytest.raises(InfeasiblePlanError):
        build_weight_plan(t8, p, 2)  # 7 edges > 3*2 - 2 = 4 weights


def test_realize_matches_plan_targets(t10):
    lam = tree_lambda(t10)
    p = partition_tree(t10)
    plan = build_weight_plan(t10, p, lam)
    lab = realize_plan(t10, p, plan, lam)
    assert weight_multiset(t10, lab) == sorted(plan.targets.values())


def test_label_tree_single_edge():
    lab = label_tree(path_graph(2))
    assert lab.bound_k == 1 and lab.vertex_labels == (1, 1)


def test_label_tree_p4(p4):
    lab = label_tree(p4)
    assert lab.bound_k == 2
    assert verify_irregular(p4, lab).ok


def test_label_tree_t10(t10):
    lab = label_tree(t10)
    assert lab.bound_k == 4
    assert verify_irregular(t10, lab).ok


def test_label_tree_t8_full_interval(t8):
    lab = label_tree(t8)
    assert lab.bound_k == 3
    assert verify_irregular(t8, lab).ok
    assert weight_multiset(t8, lab) == list(range(3, 10))


def test_label_tree_rejects_cycle():
    with pytest.raises(GraphError):
        label_tree(cycle_graph(5))


def test_b_labels_nondecreasing_in_bfs_order_on_easy_fixtures(p4):
    # advisory: the default search tries nondecreasing B labels first, so on
    # fixtures where that branch succeeds the B sequence comes out sorted
    for t in (p4, star_graph(6)):
        p = partition_tree(t)
        lab = label_tree(t)
        b_seq = [lab.vertex_labels[v] for v in bfs_order(t, p.root) if v in p.set_b]
        assert b_seq == sorted(b_seq)


@given(trees(min_n=3, max_n=12))
@settings(max_examples=120)
def test_partition_size_constraints(t):
    n = t.vertex_count
    p = partition_tree(t)
    assert len(p.set_a) == len(p.set_c) == (n + 1) // 3
    assert len(p.set_b) == n - 2 * ((n + 1) // 3)
    assert not (p.set_a & p.set_b) and not (p.set_a & p.set_c) and not (p.set_b & p.set_c)
    assert p.set_a | p.set_b | p.set_c == set(range(n))


@given(trees(min_n=3, max_n=12))
@settings(max_examples=80)
def test_plan_targets_distinct_in_range(t):
    lam = tree_lambda(t)
    p = partition_tree(t)
    try:
        plan = build_weight_plan(t, p, lam)
    except InfeasiblePlanError:
        return
    targets = list(plan.targets.values())
    assert len(set(targets)) == len(targets) == t.edge_count
    assert all(3 <= w <= 3 * lam for w in targets)


def test_exhaustive_small_trees_end_to_end():
    for n in range(2, 7):
        for t in enumerate_labelled_trees(n):
            lab = label_tree(t)
            lam = tree_lambda(t)
            assert lab.bound_k == lam
            assert verify_irregular(t, lab).ok


def test_500_random_trees_end_to_end():
    rng = SplitMix64(20240817)
    for _ in range(500):
        n = 2 + rng.randint(39)
        t = gen_random_tree(n, rng.next_u64())
        lab = label_tree(t)
        assert lab.bound_k == tree_lambda(t)
        assert verify_irregular(t, lab).ok
