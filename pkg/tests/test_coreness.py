"""Core decomposition against a naive iterated-deletion oracle."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ids_of, labels_of
from sizedcore.coreness import (
    best_core_upper_bound,
    best_core_upper_bound_by_component,
    core_decompose,
    kcore_of_subset,
    maximal_k_cores,
)
from sizedcore.graph import Graph, gnp_random_graph


def naive_coreness(g: Graph) -> list[int]:
    """Iterated deletion: for each k, repeatedly drop nodes of degree < k."""
    core = [0] * g.n
    maxdeg = max((len(a) for a in g.adj), default=0)
    for k in range(1, maxdeg + 1):
        alive = set(range(g.n))
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if sum(1 for w in g.adj[v] if w in alive) < k:
                    alive.discard(v)
                    changed = True
        for v in alive:
            core[v] = k
    return core


def test_clique_coreness():
    g = Graph.from_edges([(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert list(core_decompose(g).coreness) == [3, 3, 3, 3]


def test_path_coreness():
    g = Graph.from_edges([("a", "b"), ("b", "c")])
    assert list(core_decompose(g).coreness) == [1, 1, 1]


def test_k4_pendant_coreness(k4_pendant):
    table = core_decompose(k4_pendant)
    by_label = {k4_pendant.labels[v]: c for v, c in enumerate(table.coreness)}
    assert by_label == {1: 3, 2: 3, 3: 3, 4: 3, 5: 1, 6: 1}
    assert table.degeneracy == 3


def test_table_invariants(petersen):
    table = core_decompose(petersen)
    assert table.size_at_or_above[0] == petersen.n
    assert all(
        table.size_at_or_above[k] >= table.size_at_or_above[k + 1]
        for k in range(table.degeneracy)
    )
    assert all(
        0 <= table.coreness[v] <= len(petersen.adj[v]) for v in range(petersen.n)
    )


def test_maximal_k_cores_two_triangles(two_triangles):
    cores = maximal_k_cores(two_triangles, core_decompose(two_triangles), 2)
    assert sorted(len(c) for c in cores) == [3, 3]


def test_maximal_k_cores_k4_pendant(k4_pendant):
    cores = maximal_k_cores(k4_pendant, core_decompose(k4_pendant), 2)
    assert [labels_of(k4_pendant, c) for c in cores] == [{1, 2, 3, 4}]


def test_maximal_k_cores_above_degeneracy(k5):
    assert maximal_k_cores(k5, core_decompose(k5), 5) == []


def test_upper_bound_k5(k5):
    assert best_core_upper_bound(core_decompose(k5), 5) == 4


def test_upper_bound_k4_pendant(k4_pendant):
    table = core_decompose(k4_pendant)
    assert best_core_upper_bound(table, 4) == 3
    assert best_core_upper_bound(table, 5) == 1


def test_upper_bound_t1_is_degeneracy(petersen):
    table = core_decompose(petersen)
    assert best_core_upper_bound(table, 1) == table.degeneracy


def test_component_bound_not_above_global(two_triangles):
    table = core_decompose(two_triangles)
    global_bound = best_core_upper_bound(table, 4)
    comp_bound = best_core_upper_bound_by_component(two_triangles, table, 4)
    assert comp_bound <= global_bound


def test_kcore_of_subset(k4_pendant):
    sub = ids_of(k4_pendant, {1, 2, 3, 4, 5})
    kept = kcore_of_subset(k4_pendant, sub, 3)
    assert labels_of(k4_pendant, kept) == {1, 2, 3, 4}


def test_matches_naive_oracle_random():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 28)
        g = gnp_random_graph(n, rng.choice([0.1, 0.25, 0.5]), seed=rng.random())
        assert list(core_decompose(g).coreness) == naive_coreness(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 20), st.integers(0, 10_000))
def test_kcore_membership_induces_min_degree(n, seed):
    g = gnp_random_graph(n, 0.3, seed=seed)
    table = core_decompose(g)
    for k in range(1, table.degeneracy + 1):
        members = {v for v in range(g.n) if table.coreness[v] >= k}
        assert all(
            sum(1 for w in g.adj[v] if w in members) >= k for v in members
        )
