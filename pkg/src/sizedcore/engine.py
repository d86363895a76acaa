"""Randomized search for a t-node subgraph with the highest core number.

The driver computes the coreness-based upper bound k-bar, then sweeps k
from k-bar down to 2. At each level one of two strategies tries to carve
an exactly-t-node k-core out of the maximal k-core components:

* top-down: start from a component of size >= t and shrink it one node
  at a time, re-peeling to a k-core after every removal;
* bottom-up: cut a component down to a random t-subset, peel, and grow
  the surviving k-core back up to t nodes.

If every level fails, a BFS ball around a maximum-coreness node is
returned so the result always has exactly t nodes.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .coreness import (
    CorenessTable,
    best_core_upper_bound,
    best_core_upper_bound_by_component,
    core_decompose,
    kcore_of_subset,
    maximal_k_cores,
)
from .graph import (
    Graph,
    NodeSet,
    bfs_connected_subset,
    connected_components,
    induced_min_degree,
)
from .pickers import BucketPicker, ListDict

# candidates at or above this size use the vectorized shrink path
_LARGE_SHRINK = 3000


class Strategy(str, Enum):
    TOP_DOWN = "td"
    BOTTOM_UP = "bu"


class CandidateOrder(str, Enum):
    LARGEST_FIRST = "largest"
    RANDOM = "random"


class GrowthRule(str, Enum):
    MAX_IN_NEIGHBORS = "max"
    RANDOM_ELIGIBLE = "random"


class RemovalOrder(str, Enum):
    RANDOM = "random"
    LOWEST_DEGREE_FIRST = "lowdeg"


@dataclass(frozen=True)
class StrategyParams:
    """Tuning knobs for sized_core_search."""

    strategy: Strategy = Strategy.TOP_DOWN
    bu_candidate_order: CandidateOrder = CandidateOrder.LARGEST_FIRST
    bu_growth_rule: GrowthRule = GrowthRule.MAX_IN_NEIGHBORS
    td_removal_order: RemovalOrder = RemovalOrder.RANDOM
    max_restarts_per_k: int = 1

    def __post_init__(self):
        if self.max_restarts_per_k < 1:
            raise ValueError("max_restarts_per_k must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one seeded search run.

    ``core_number`` is recomputed from the returned nodes, never taken on
    faith from the search path; ``optimal`` is the upper-bound
    certificate (core_number == upper_bound).
    """

    nodes: NodeSet
    core_number: int
    upper_bound: int
    optimal: bool
    algorithm: str
    t: int
    seed: int
    elapsed: float


def _as_rng(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _max_coreness_node(table: CorenessTable) -> int:
    return table.coreness.index(table.degeneracy)


def _finish(
    g: Graph, nodes: NodeSet, kbar: int, algorithm: str, t: int, seed: int, t0: float
) -> SearchResult:
    core = induced_min_degree(g, nodes)
    return SearchResult(
        nodes=frozenset(nodes),
        core_number=core,
        upper_bound=kbar,
        optimal=core == kbar,
        algorithm=algorithm,
        t=t,
        seed=seed,
        elapsed=time.perf_counter() - t0,
    )


def _check_inputs(g: Graph, t: int) -> None:
    if not 1 <= t <= g.n:
        raise ValueError(f"t={t} outside [1, {g.n}]")
    if not g.is_connected():
        raise ValueError(
            "graph must be connected; restrict to the largest component first"
        )


def _require_kcore(g: Graph, members: list[int], k: int, opname: str) -> None:
    inside = set(members)
    for v in members:
        if sum(1 for w in g.adj[v] if w in inside) < k:
            raise ValueError(f"{opname}: input set is not a k-core at k={k}")


def sized_core_search(
    g: Graph,
    t: int,
    params: StrategyParams | None = None,
    seed: int = 0,
    table: CorenessTable | None = None,
    component_bound: bool = False,
) -> SearchResult:
    """Search for a t-node subgraph maximizing the induced min degree.

    ``table`` lets callers reuse a precomputed core decomposition.
    ``component_bound`` switches the upper bound to the per-component
    variant (sound here because every returned set is connected).
    """
    t0 = time.perf_counter()
    params = params or StrategyParams()
    _check_inputs(g, t)
    if table is None:
        table = core_decompose(g)
    if component_bound:
        kbar = best_core_upper_bound_by_component(g, table, t)
    else:
        kbar = best_core_upper_bound(table, t)
    algorithm = params.strategy.value
    rng = random.Random(seed)

    if t == 1:
        nodes: NodeSet | None = frozenset({_max_coreness_node(table)})
        return _finish(g, nodes, kbar, algorithm, t, seed, t0)

    nodes = None
    for k in range(kbar, 1, -1):
        for _ in range(params.max_restarts_per_k):
            nodes = _try_level(g, table, k, t, params, rng)
            if nodes is not None:
                break
        if nodes is not None:
            break
    if nodes is None:
        nodes = bfs_connected_subset(g, _max_coreness_node(table), t)
    return _finish(g, nodes, kbar, algorithm, t, seed, t0)


def _try_level(
    g: Graph,
    table: CorenessTable,
    k: int,
    t: int,
    params: StrategyParams,
    rng: random.Random,
) -> NodeSet | None:
    if params.strategy is Strategy.TOP_DOWN:
        for cand in top_down_candidates(g, table, k, t):
            if len(cand) == t:
                return cand
            found = shrink_refinement(g, cand, k, t, params.td_removal_order, rng)
            if found is not None:
                return found
    else:
        cands = bottom_up_candidates(g, table, k, t, rng)
        if params.bu_candidate_order is CandidateOrder.RANDOM:
            rng.shuffle(cands)
        for cand in cands:
            if len(cand) == t:
                return cand
            found = grow_refinement(g, cand, k, t, params.bu_growth_rule, rng)
            if found is not None:
                return found
    return None


def top_down_candidates(
    g: Graph, table: CorenessTable, k: int, t: int
) -> list[NodeSet]:
    """Maximal k-core components of size >= t, largest first."""
    if k < 1:
        raise ValueError("k must be positive")
    return [c for c in maximal_k_cores(g, table, k) if len(c) >= t]


def bottom_up_candidates(
    g: Graph,
    table: CorenessTable,
    k: int,
    t: int,
    seed: int | random.Random | None = None,
) -> list[NodeSet]:
    """Connected k-cores of size <= t cut from each maximal component.

    Components already at or below t are emitted whole; a larger
    component is cut to a uniformly random t-subset, peeled back to a
    k-core, and the surviving components are emitted. May be empty.
    """
    if k < 1:
        raise ValueError("k must be positive")
    rng = _as_rng(seed)
    out: list[NodeSet] = []
    for comp in maximal_k_cores(g, table, k):
        if len(comp) <= t:
            out.append(comp)
        else:
            keep = rng.sample(sorted(comp), t)
            survivors = kcore_of_subset(g, keep, k)
            if survivors:
                out.extend(
                    frozenset(c) for c in connected_components(g, survivors)
                )
    return out


def grow_refinement(
    g: Graph,
    h: NodeSet,
    k: int,
    t: int,
    rule: GrowthRule = GrowthRule.MAX_IN_NEIGHBORS,
    seed: int | random.Random | None = None,
) -> NodeSet | None:
    """Grow the k-core ``h`` to exactly t nodes, or fail.

    Only nodes with at least k neighbors already inside may join, so the
    min internal degree never drops below k. The default rule takes an
    eligible node with the most inside neighbors (ties uniform at
    random); the alternative samples uniformly from all eligible nodes.
    """
    rng = _as_rng(seed)
    inside = set(h)
    if not inside:
        raise ValueError("h is empty")
    if len(inside) > t:
        raise ValueError("grow_refinement needs |h| <= t")
    members = sorted(inside)
    _require_kcore(g, members, k, "grow_refinement")
    if len(inside) == t:
        return frozenset(inside)
    adj = g.adj

    if rule is GrowthRule.MAX_IN_NEIGHBORS:
        picker = BucketPicker()
        for v in members:
            for w in adj[v]:
                if w not in inside:
                    picker.set_score(w, picker.score.get(w, 0) + 1)
        while len(inside) < t:
            top = picker.top_bucket()
            if top is None or top[0] < k:
                return None
            score, items = top
            v = items[rng.randrange(len(items))]
            picker.remove(v)
            assert score >= k
            inside.add(v)
            for w in adj[v]:
                if w not in inside:
                    picker.set_score(w, picker.score.get(w, 0) + 1)
        return frozenset(inside)

    count: dict[int, int] = {}
    eligible = ListDict()
    for v in members:
        for w in adj[v]:
            if w not in inside:
                c = count.get(w, 0) + 1
                count[w] = c
                if c == k:
                    eligible.add(w)
    while len(inside) < t:
        if not len(eligible):
            return None
        v = eligible.choose(rng)
        eligible.discard(v)
        assert count[v] >= k
        inside.add(v)
        del count[v]
        for w in adj[v]:
            if w not in inside:
                c = count.get(w, 0) + 1
                count[w] = c
                if c == k:
                    eligible.add(w)
    return frozenset(inside)


def shrink_refinement(
    g: Graph,
    h: frozenset[int],
    k: int,
    t: int,
    order: RemovalOrder = RemovalOrder.RANDOM,
    seed: int | None = None,
) -> frozenset[int] | None:
    """Shrink the k-core ``h`` toward exactly ``t`` nodes.

    Visits each node of ``h`` once, in the configured order.  Removing a
    node triggers a peel back to a k-core; if some surviving component
    hits exactly ``t`` nodes it is returned, if one stays above ``t`` the
    search continues inside it, and otherwise the removal is undone.
    Nodes peeled away by earlier visits are skipped; failure once the
    order is exhausted.
    """
    members = sorted(h)
    size = len(members)
    if size <= t:
        raise ValueError("shrink_refinement: input set has no excess nodes")

    idx = np.asarray(members, dtype=np.int64)
    sub = g.csr()[idx][:, idx]
    indptr = sub.indptr
    indices = sub.indices
    deg = np.diff(indptr).astype(np.int64)
    if size and int(deg.min()) < k:
        raise ValueError(
            f"shrink_refinement: input set is not a k-core at k={k}"
        )

    if order is RemovalOrder.LOWEST_DEGREE_FIRST:
        visit = np.argsort(deg, kind="stable").tolist()
    else:
        visit = list(range(size))
        _as_rng(seed).shuffle(visit)

    alive = np.ones(size, dtype=bool)
    alive_snap = np.empty_like(alive)
    deg_snap = np.empty_like(deg)
    labels = np.zeros(size, dtype=np.int64)
    # Nodes whose own removal already failed. Any cascade that kills one
    # of them is doomed too (its residue embeds in the failed residue,
    # whose components all sat below t), and staying doomed survives
    # later commits because k-cores only shrink in subgraphs. _peel
    # aborts on first contact, which turns the long all-fail stretches
    # from full collapse simulations into near-instant rejections.
    failed = np.zeros(size, dtype=bool)

    for v in visit:
        if not alive[v]:
            continue
        np.copyto(alive_snap, alive)
        np.copyto(deg_snap, deg)
        if _peel(indptr, indices, alive, deg, k, v, size - t, failed):
            np.copyto(alive, alive_snap)
            np.copyto(deg, deg_snap)
            failed[v] = True
            continue
        removed = np.flatnonzero(alive_snap & ~alive)
        res_size = size - removed.size
        nbrs, _ = _gather(indptr, indices, removed)
        seeds = np.unique(nbrs[alive[nbrs]])
        single, survivors, comp = _flood_components(
            indptr, indices, alive, seeds, labels
        )
        if single:
            if res_size == t:
                return frozenset(members[int(u)] for u in np.flatnonzero(alive))
            size = res_size
            continue
        sizes = np.bincount(comp)
        exact = np.flatnonzero(sizes == t)
        if exact.size:
            keep = survivors[comp == exact[0]]
            return frozenset(members[int(u)] for u in keep)
        big = int(sizes.argmax())
        if int(sizes[big]) > t:
            alive[survivors[comp != big]] = False
            size = int(sizes[big])
            continue
        np.copyto(alive, alive_snap)
        np.copyto(deg, deg_snap)
        failed[v] = True
    return None


# a peel frontier at or above this many pending nodes switches to waves
_WAVE_MIN_FRONTIER = 32


def _peel(indptr, indices, alive, deg, k, v, limit, failed) -> bool:
    """Remove ``v`` and peel back to a k-core; True means doomed.

    The cascade runs as a scalar FIFO and escalates to synchronous numpy
    waves once the frontier widens; both orders reach the same residue
    because peeling is confluent.  Doomed means the removal cannot be
    kept: either more than ``limit`` nodes were lost, or the cascade
    consumed a node from ``failed``, whose known residue bounds this
    one.  Aborts mid-cascade, leaving the caller to restore state.
    """
    n = alive.shape[0]
    alive[v] = False
    count = 1
    queue = [v]
    head = 0
    while head < len(queue):
        if len(queue) - head >= _WAVE_MIN_FRONTIER:
            break
        u = queue[head]
        head += 1
        for w in indices[indptr[u] : indptr[u + 1]].tolist():
            if not alive[w]:
                continue
            d = deg[w] - 1
            deg[w] = d
            if d < k:
                if failed[w]:
                    return True
                alive[w] = False
                count += 1
                if count > limit:
                    return True
                queue.append(w)
    else:
        return False

    frontier = np.asarray(queue[head:], dtype=np.int64)
    while frontier.size:
        nbrs, _ = _gather(indptr, indices, frontier)
        nbrs = nbrs[alive[nbrs]]
        deg -= np.bincount(nbrs, minlength=n)
        die = nbrs[deg[nbrs] < k]
        if die.size <= 512:
            newly = np.unique(die)
            alive[newly] = False
        else:
            before = alive.copy()
            alive[die] = False
            newly = np.flatnonzero(before & ~alive)
        if failed[newly].any():
            return True
        count += newly.size
        if count > limit:
            return True
        frontier = newly
    return False


def _gather(indptr, indices, nodes):
    """Concatenated neighbor lists of ``nodes`` plus per-node counts."""
    starts = indptr[nodes]
    counts = indptr[nodes + 1] - starts
    total = int(counts.sum())
    ends = np.cumsum(counts)
    offsets = np.repeat(ends - counts, counts)
    flat = np.arange(total, dtype=np.int64) - offsets + np.repeat(starts, counts)
    return indices[flat], counts


def _flood_components(indptr, indices, alive, seeds, labels):
    """Label the alive graph's components by flooding from ``seeds``.

    Every component of the residue touches a neighbor of the removed
    set (the input was connected), so seeding the flood there reaches
    everything.  Labels merge through a union-find when floods collide;
    a single surviving root short-circuits to (True, None, None), the
    common case where the residue stayed connected.  Otherwise returns
    (False, survivors, comp) with ``comp[i]`` the component index of
    ``survivors[i]``.  ``labels`` is scratch space, zeroed on return.
    """
    m = seeds.shape[0]
    if m <= 1:
        return True, None, None
    parent = list(range(m + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    labels[seeds] = np.arange(1, m + 1)
    roots = m
    touched = [seeds]
    frontier = seeds
    while frontier.size and roots > 1:
        nbrs, counts = _gather(indptr, indices, frontier)
        src = np.repeat(labels[frontier], counts)
        keep = alive[nbrs]
        nbrs = nbrs[keep]
        src = src[keep]
        dst = labels[nbrs]
        unclaimed = dst == 0
        if unclaimed.any():
            uniq, first = np.unique(nbrs[unclaimed], return_index=True)
            labels[uniq] = src[unclaimed][first]
            touched.append(uniq)
            frontier = uniq
            dst = labels[nbrs]
        else:
            frontier = nbrs[:0]
        diff = src != dst
        if diff.any():
            pairs = np.unique(src[diff] * np.int64(m + 1) + dst[diff])
            for p in pairs.tolist():
                a, c = find(p // (m + 1)), find(p % (m + 1))
                if a != c:
                    parent[a] = c
                    roots -= 1
    if roots == 1:
        for arr in touched:
            labels[arr] = 0
        return True, None, None
    survivors = np.flatnonzero(alive)
    assert int(labels[survivors].min()) > 0
    comp_root = [find(x) for x in labels[survivors].tolist()]
    _, comp = np.unique(np.asarray(comp_root), return_inverse=True)
    for arr in touched:
        labels[arr] = 0
    return False, survivors, comp
