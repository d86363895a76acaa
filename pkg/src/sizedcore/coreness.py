"""Core decomposition and coreness-derived bounds.

The decomposition uses bucket peeling over degree bins, which runs in
O(n + m) time and assigns every node its coreness: the largest k such
that the node survives in the maximal k-core.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, NodeSet, connected_components


@dataclass(frozen=True)
class CorenessTable:
    """Per-node coreness plus aggregates reused by searches.

    ``size_at_or_above[k]`` counts nodes with coreness >= k for
    k in 0..degeneracy; index 0 equals n.
    """

    coreness: tuple[int, ...]
    degeneracy: int
    size_at_or_above: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coreness)


def core_decompose(g: Graph) -> CorenessTable:
    """Compute the coreness of every node by bucket peeling."""
    n = g.n
    if n == 0:
        return CorenessTable((), 0, (0,))
    adj = g.adj
    deg = [len(adj[v]) for v in range(n)]
    maxdeg = max(deg)

    bins = [0] * (maxdeg + 2)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(maxdeg + 1):
        cnt = bins[d]
        bins[d] = start
        start += cnt
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(maxdeg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    core = deg[:]
    for i in range(n):
        v = vert[i]
        cv = core[v]
        for u in adj[v]:
            cu = core[u]
            if cu > cv:
                pu = pos[u]
                pw = bins[cu]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bins[cu] += 1
                core[u] = cu - 1

    degeneracy = max(core)
    counts = [0] * (degeneracy + 1)
    for c in core:
        counts[c] += 1
    at_or_above = [0] * (degeneracy + 1)
    running = 0
    for k in range(degeneracy, -1, -1):
        running += counts[k]
        at_or_above[k] = running
    return CorenessTable(tuple(core), degeneracy, tuple(at_or_above))


def maximal_k_cores(g: Graph, table: CorenessTable, k: int) -> list[NodeSet]:
    """Connected components of the maximal k-core.

    Ordered by decreasing size, ties by smallest member id. Empty list
    when no node reaches coreness k.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > table.degeneracy:
        return []
    members = [v for v in range(g.n) if table.coreness[v] >= k]
    if not members:
        return []
    return [frozenset(c) for c in connected_components(g, members)]


def best_core_upper_bound(table: CorenessTable, t: int) -> int:
    """Largest k with at least t nodes of coreness >= k.

    No t-node subgraph can have a core number above this value, because
    a subgraph with min degree k embeds in the maximal k-core.
    """
    if not 1 <= t <= table.n:
        raise ValueError(f"t={t} outside [1, {table.n}]")
    for k in range(table.degeneracy, 0, -1):
        if table.size_at_or_above[k] >= t:
            return k
    return 0


def best_core_upper_bound_by_component(g: Graph, table: CorenessTable, t: int) -> int:
    """Largest k whose maximal k-core has a component of size >= t.

    Tighter than best_core_upper_bound but valid only for connected
    solutions: a connected subgraph with min degree k lies entirely
    inside one component of the maximal k-core.
    """
    if not 1 <= t <= g.n:
        raise ValueError(f"t={t} outside [1, {g.n}]")
    for k in range(table.degeneracy, 0, -1):
        comps = maximal_k_cores(g, table, k)
        if comps and len(comps[0]) >= t:
            return k
    return 0


def kcore_of_subset(g: Graph, members: Iterable[int], k: int) -> list[int]:
    """Peel the subgraph induced on ``members`` down to its k-core.

    Returns the ascending list of surviving ids; empty when nothing
    survives.
    """
    alive = set(members)
    indeg = {v: 0 for v in alive}
    for v in indeg:
        indeg[v] = sum(1 for w in g.adj[v] if w in alive)
    queue = deque(v for v in sorted(alive) if indeg[v] < k)
    for v in queue:
        alive.discard(v)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in alive:
                indeg[w] -= 1
                if indeg[w] < k:
                    alive.discard(w)
                    queue.append(w)
    return sorted(alive)
