"""Exhaustive reference solver for small instances."""

from __future__ import annotations

import itertools
import math

from .errors import BudgetExceededError
from .graph import Graph, NodeSet

DEFAULT_BUDGET = 10_000_000


def exact_search(g: Graph, t: int, budget: int = DEFAULT_BUDGET) -> tuple[int, NodeSet]:
    """Best achievable induced min degree over all t-node subsets.

    Enumerates subsets in lexicographic id order and returns the optimum
    with the first witness attaining it, so results are deterministic.
    Stops early once min degree t-1 (a clique) appears. Raises
    BudgetExceededError before enumerating when comb(n, t) > budget.
    """
    if not 1 <= t <= g.n:
        raise ValueError(f"t={t} outside [1, {g.n}]")
    required = math.comb(g.n, t)
    if required > budget:
        raise BudgetExceededError(
            f"comb({g.n}, {t}) = {required} exceeds budget {budget}",
            required=required,
            budget=budget,
        )
    adj_sets = [set(row) for row in g.adj]
    best = -1
    witness: tuple[int, ...] = ()
    cap = t - 1
    for combo in itertools.combinations(range(g.n), t):
        inside = set(combo)
        d = min(len(adj_sets[v] & inside) for v in combo)
        if d > best:
            best = d
            witness = combo
            if best == cap:
                break
    return best, frozenset(witness)
