"""Comparison strategies: random critical peeling and greedy expansion."""

from __future__ import annotations

import random
import time

from .coreness import (
    CorenessTable,
    best_core_upper_bound,
    core_decompose,
    maximal_k_cores,
)
from .engine import (
    SearchResult,
    _check_inputs,
    _finish,
    _max_coreness_node,
)
from .graph import Graph, NodeSet, bfs_connected_subset
from .pickers import BucketPicker, ListDict


def critical_search(
    g: Graph, t: int, seed: int = 0, table: CorenessTable | None = None
) -> SearchResult:
    """Shrink maximal k-cores by uniformly random single removals.

    A picked node is removed only when the residual set keeps min
    internal degree >= k (connectivity is not maintained). A component
    is abandoned as critical once every current member has failed since
    the last successful removal. Levels and fallback follow the same
    k-bar sweep as sized_core_search.
    """
    t0 = time.perf_counter()
    _check_inputs(g, t)
    if table is None:
        table = core_decompose(g)
    kbar = best_core_upper_bound(table, t)
    rng = random.Random(seed)
    if t == 1:
        nodes: NodeSet = frozenset({_max_coreness_node(table)})
        return _finish(g, nodes, kbar, "critical", t, seed, t0)
    for k in range(kbar, 1, -1):
        for comp in maximal_k_cores(g, table, k):
            if len(comp) < t:
                continue
            if len(comp) == t:
                return _finish(g, comp, kbar, "critical", t, seed, t0)
            found = _critical_shrink(g, comp, k, t, rng)
            if found is not None:
                return _finish(g, found, kbar, "critical", t, seed, t0)
    nodes = bfs_connected_subset(g, _max_coreness_node(table), t)
    return _finish(g, nodes, kbar, "critical", t, seed, t0)


def _critical_shrink(
    g: Graph, comp: NodeSet, k: int, t: int, rng: random.Random
) -> NodeSet | None:
    adj = g.adj
    members = sorted(comp)
    alive = bytearray(g.n)
    indeg = [0] * g.n
    for v in members:
        alive[v] = 1
    for v in members:
        indeg[v] = sum(alive[w] for w in adj[v])
    live = ListDict(members)
    tried: set[int] = set()
    while len(live) > t:
        if len(tried) == len(live):
            return None
        v = live.choose(rng)
        if v in tried:
            continue
        # removal is legal iff every inside neighbor stays at >= k
        if all(indeg[w] > k for w in adj[v] if alive[w]):
            alive[v] = 0
            live.discard(v)
            for w in adj[v]:
                if alive[w]:
                    indeg[w] -= 1
                    assert indeg[w] >= k
            tried.clear()
        else:
            tried.add(v)
    return frozenset(live)


def sgreedy_search(
    g: Graph, t: int, seed: int = 0, table: CorenessTable | None = None
) -> SearchResult:
    """Greedy expansion from a maximum-coreness seed node.

    Reconstructed baseline (the cited original targets a different
    objective and gives no pseudocode for this setting): grow the set by
    the frontier node with the most edges into it, ties broken by higher
    coreness, then uniformly at random. Always reaches t on a connected
    graph.
    """
    t0 = time.perf_counter()
    _check_inputs(g, t)
    if table is None:
        table = core_decompose(g)
    kbar = best_core_upper_bound(table, t)
    rng = random.Random(seed)
    cor = table.coreness
    seeds = [v for v in range(g.n) if cor[v] == table.degeneracy]
    start = seeds[rng.randrange(len(seeds))]
    inside = {start}
    picker = BucketPicker()
    for w in g.adj[start]:
        picker.set_score(w, 1)
    while len(inside) < t:
        top = picker.top_bucket()
        assert top is not None, "connected graph cannot run out of frontier"
        _, items = top
        best_cor = max(cor[x] for x in items)
        cands = [x for x in items if cor[x] == best_cor]
        v = cands[rng.randrange(len(cands))]
        picker.remove(v)
        inside.add(v)
        for w in g.adj[v]:
            if w not in inside:
                picker.set_score(w, picker.score.get(w, 0) + 1)
    return _finish(g, frozenset(inside), kbar, "sgreedy", t, seed, t0)
