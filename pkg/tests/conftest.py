"""Shared fixture graphs. Labels follow the 1-based naming used in docs."""

import pytest

from sizedcore.graph import Graph


def complete_graph(n: int) -> Graph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return Graph.from_edges(edges)


def labels_of(g: Graph, nodes) -> set:
    return {g.labels[v] for v in nodes}


def ids_of(g: Graph, labels) -> frozenset:
    index = {lab: i for i, lab in enumerate(g.labels)}
    return frozenset(index[x] for x in labels)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def k6() -> Graph:
    return complete_graph(6)


@pytest.fixture
def k4_pendant() -> Graph:
    """K4 on {1,2,3,4} plus pendant path 4-5, 5-6."""
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6)]
    return Graph.from_edges(edges)


@pytest.fixture
def octahedron() -> Graph:
    """K6 minus the perfect matching {1,4}, {2,5}, {3,6}: 4-regular."""
    matching = {frozenset((1, 4)), frozenset((2, 5)), frozenset((3, 6))}
    edges = [
        (i, j)
        for i in range(1, 7)
        for j in range(i + 1, 7)
        if frozenset((i, j)) not in matching
    ]
    return Graph.from_edges(edges)


@pytest.fixture
def path5() -> Graph:
    return Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def cycle5() -> Graph:
    return Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


@pytest.fixture
def star4() -> Graph:
    return Graph.from_edges([("c", "l1"), ("c", "l2"), ("c", "l3"), ("c", "l4")])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner)


@pytest.fixture
def two_triangles() -> Graph:
    edges = [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]
    return Graph.from_edges(edges)


@pytest.fixture
def two_k4s() -> Graph:
    a = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    b = [(5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]
    return Graph.from_edges(a + b)
