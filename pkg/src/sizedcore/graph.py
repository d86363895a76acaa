"""Immutable undirected graph, edge-list ingestion, and node-set utilities.

Graphs are simple and undirected. Nodes get dense internal ids ``0..n-1``
in first-appearance order; ``labels`` maps an internal id back to the
token that named the node in the source edge list.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left
from collections import deque
from pathlib import Path
from typing import Hashable, Iterable, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .errors import EmptyGraphError, GraphParseError

NodeSet = frozenset[int]

_COMMENT_PREFIXES = ("#", "%")
# below this many members, component extraction by plain BFS beats the
# cost of slicing a sparse matrix
_SCIPY_MIN_MEMBERS = 3000


class Graph:
    """Undirected simple graph with sorted adjacency lists.

    Instances are treated as immutable after construction and can be
    shared freely across threads.
    """

    __slots__ = ("n", "m", "adj", "labels", "_csr", "_connected")

    def __init__(self, adj: list[list[int]], labels: Sequence[Hashable]):
        if len(adj) != len(labels):
            raise ValueError("adjacency and labels must have equal length")
        self.n = len(adj)
        self.m = sum(len(a) for a in adj) // 2
        self.adj = adj
        self.labels = list(labels)
        self._csr = None
        self._connected: bool | None = None

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Hashable, Hashable]],
        nodes: Iterable[Hashable] | None = None,
        restrict_to_lcc: bool = False,
    ) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Self-loops are dropped (their endpoints are still registered) and
        duplicate edges collapse. ``nodes`` pre-registers ids so isolated
        nodes survive.
        """
        index: dict[Hashable, int] = {}
        adjsets: list[set[int]] = []
        labels: list[Hashable] = []

        def intern(x: Hashable) -> int:
            i = index.get(x)
            if i is None:
                i = len(labels)
                index[x] = i
                labels.append(x)
                adjsets.append(set())
            return i

        if nodes is not None:
            for x in nodes:
                intern(x)
        for u, v in edges:
            iu, iv = intern(u), intern(v)
            if iu != iv:
                adjsets[iu].add(iv)
                adjsets[iv].add(iu)
        g = cls([sorted(s) for s in adjsets], labels)
        if restrict_to_lcc and g.n:
            g = largest_component_subgraph(g)
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def is_connected(self) -> bool:
        """True for graphs with at most one node or a single component."""
        if self._connected is None:
            if self.n <= 1:
                self._connected = True
            else:
                seen = bytearray(self.n)
                seen[0] = 1
                queue = deque([0])
                count = 1
                while queue:
                    u = queue.popleft()
                    for w in self.adj[u]:
                        if not seen[w]:
                            seen[w] = 1
                            count += 1
                            queue.append(w)
                self._connected = count == self.n
        return self._connected

    def csr(self) -> sparse.csr_matrix:
        """Adjacency as a scipy CSR matrix (cached)."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.adj[v])
            total = int(indptr[-1])
            indices = np.fromiter(
                (w for row in self.adj for w in row), dtype=np.int64, count=total
            )
            data = np.ones(total, dtype=np.int8)
            self._csr = sparse.csr_matrix(
                (data, indices, indptr), shape=(self.n, self.n)
            )
        return self._csr

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Subgraph on ``keep``; relative id order is preserved."""
        kept = sorted(set(keep))
        remap = {old: new for new, old in enumerate(kept)}
        adj = [
            [remap[w] for w in self.adj[old] if w in remap] for old in kept
        ]
        return Graph(adj, [self.labels[old] for old in kept])

    def to_edge_list(self) -> str:
        """Serialize as whitespace-separated label pairs, one edge per line."""
        lines = [
            f"{self.labels[u]} {self.labels[v]}"
            for u in range(self.n)
            for v in self.adj[u]
            if u < v
        ]
        return "\n".join(lines) + ("\n" if lines else "")

    def check_invariants(self) -> None:
        """Full-scan structural check; intended for tests."""
        assert self.m == sum(len(a) for a in self.adj) // 2
        for v, row in enumerate(self.adj):
            assert row == sorted(set(row)), f"adjacency of {v} not sorted/simple"
            assert v not in row, f"self-loop at {v}"
            for w in row:
                assert 0 <= w < self.n
                assert v in self.adj[w], f"edge {v}-{w} not symmetric"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(source: str | Iterable[str], restrict_to_lcc: bool = True) -> Graph:
    """Parse whitespace-separated edge pairs into a Graph.

    Lines starting with ``#`` or ``%`` and blank lines are skipped. Any
    other line must hold exactly two tokens or a GraphParseError carrying
    the 1-based line number is raised. Self-loops are dropped but still
    register their endpoint. With ``restrict_to_lcc`` (the default) the
    result is reduced to its largest connected component.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    index: dict[str, int] = {}
    adjsets: list[set[int]] = []
    labels: list[str] = []

    def intern(tok: str) -> int:
        i = index.get(tok)
        if i is None:
            i = len(labels)
            index[tok] = i
            labels.append(tok)
            adjsets.append(set())
        return i

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(
                f"line {lineno}: expected 2 tokens, found {len(parts)}",
                line=lineno,
            )
        iu, iv = intern(parts[0]), intern(parts[1])
        if iu != iv:
            adjsets[iu].add(iv)
            adjsets[iv].add(iu)

    if not labels:
        raise EmptyGraphError("edge list contains no nodes")
    g = Graph([sorted(s) for s in adjsets], labels)
    if restrict_to_lcc:
        g = largest_component_subgraph(g)
    return g


def load_edge_list(path: str | Path, restrict_to_lcc: bool = True) -> Graph:
    """Read and parse an edge-list file."""
    text = Path(path).read_text()
    return parse_edge_list(text, restrict_to_lcc=restrict_to_lcc)


def connected_components(
    g: Graph, within: Iterable[int] | None = None
) -> list[list[int]]:
    """Connected components of g (or of the induced subgraph on ``within``).

    Each component is an ascending id list; components are ordered by
    decreasing size, ties by smallest member id.
    """
    members = sorted(set(within)) if within is not None else list(range(g.n))
    if not members:
        return []
    if len(members) >= _SCIPY_MIN_MEMBERS:
        comps = _components_scipy(g, members)
    else:
        comps = _components_bfs(g, members)
    comps.sort(key=lambda c: (-len(c), c[0]))
    return comps


def _components_bfs(g: Graph, members: list[int]) -> list[list[int]]:
    member_set = set(members)
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in members:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in member_set and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def _components_scipy(g: Graph, members: list[int]) -> list[list[int]]:
    idx = np.asarray(members, dtype=np.int64)
    sub = g.csr()[idx][:, idx]
    ncomp, lab = csgraph.connected_components(sub, directed=False)
    order = np.argsort(lab, kind="stable")
    counts = np.bincount(lab, minlength=ncomp)
    sorted_ids = idx[order]
    comps = []
    offset = 0
    for c in counts:
        comps.append(sorted_ids[offset : offset + int(c)].tolist())
        offset += int(c)
    return comps


def largest_component_subgraph(g: Graph) -> Graph:
    """Induced subgraph on the largest component (ties: smallest member id)."""
    comps = connected_components(g)
    if len(comps) <= 1:
        return g
    return g.induced(comps[0])


def induced_min_degree(g: Graph, nodes: Iterable[int]) -> int:
    """Minimum degree of the subgraph induced on ``nodes``.

    Raises ValueError for an empty set or out-of-range ids.
    """
    inside = set(nodes)
    if not inside:
        raise ValueError("node set is empty")
    for v in inside:
        if not 0 <= v < g.n:
            raise ValueError(f"node id {v} out of range")
    return min(sum(1 for w in g.adj[v] if w in inside) for v in inside)


def bfs_connected_subset(g: Graph, seed: int, t: int) -> NodeSet:
    """First ``t`` nodes in BFS order from ``seed``.

    The induced subgraph is connected by construction. Raises ValueError
    if fewer than ``t`` nodes are reachable.
    """
    if not 0 <= seed < g.n:
        raise ValueError(f"seed {seed} out of range")
    if not 1 <= t <= g.n:
        raise ValueError(f"t={t} outside [1, {g.n}]")
    taken = [seed]
    seen = {seed}
    queue = deque([seed])
    while queue and len(taken) < t:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen:
                seen.add(w)
                taken.append(w)
                queue.append(w)
                if len(taken) == t:
                    break
    if len(taken) < t:
        raise ValueError(f"only {len(taken)} nodes reachable from seed, need {t}")
    return frozenset(taken)


def gnp_random_graph(
    n: int, p: float, seed: int | random.Random | None = None
) -> Graph:
    """Erdos-Renyi G(n, p) with integer labels 0..n-1.

    Uses geometric skip sampling, so generation is O(n + m) rather than
    O(n^2). Isolated nodes are kept; apply largest_component_subgraph for
    a connected graph.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    edges: list[tuple[int, int]] = []
    if p >= 1.0:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif p > 0.0:
        lp = math.log1p(-p)
        v, w = 1, -1
        while v < n:
            w += 1 + int(math.log1p(-rng.random()) / lp)
            while w >= v and v < n:
                w -= v
                v += 1
            if v < n:
                edges.append((v, w))
    return Graph.from_edges(edges, nodes=range(n))
