from __future__ import annotations

from itertools import combinations

import pytest

from tesgraph.graph import Graph, from_edge_list


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def t10() -> Graph:
    # 10-vertex tree with maximum degree 4 (lambda = 4, one spare weight)
    return from_edge_list(
        10, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    )


@pytest.fixture
def t8() -> Graph:
    # 8-vertex tree with 7 = 3*lambda - 2 edges (lambda = 3, zero spare weights)
    return from_edge_list(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 7)])
