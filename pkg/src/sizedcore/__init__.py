"""Search for fixed-size subgraphs with the highest possible core number.

The core number of an induced subgraph equals its minimum internal
degree; given a graph and a target size t, the library looks for a
t-node subgraph maximizing it, bounds the optimum from above via the
core decomposition, and certifies optimality when the two meet.
"""

__version__ = "0.1.0"

from .baselines import critical_search, sgreedy_search
from .bench import (
    ALGORITHMS,
    CSV_COLUMNS,
    ExperimentConfig,
    ExperimentResult,
    RunRecord,
    resolve_t,
    run_experiment,
    run_experiment_on_graph,
    single_run,
)
from .coreness import (
    CorenessTable,
    best_core_upper_bound,
    best_core_upper_bound_by_component,
    core_decompose,
    kcore_of_subset,
    maximal_k_cores,
)
from .engine import (
    CandidateOrder,
    GrowthRule,
    RemovalOrder,
    SearchResult,
    Strategy,
    StrategyParams,
    bottom_up_candidates,
    grow_refinement,
    shrink_refinement,
    sized_core_search,
    top_down_candidates,
)
from .errors import BudgetExceededError, EmptyGraphError, GraphParseError
from .exact import DEFAULT_BUDGET, exact_search
from .graph import (
    Graph,
    bfs_connected_subset,
    connected_components,
    gnp_random_graph,
    induced_min_degree,
    largest_component_subgraph,
    load_edge_list,
    parse_edge_list,
)

__all__ = [
    "ALGORITHMS",
    "BudgetExceededError",
    "CSV_COLUMNS",
    "CandidateOrder",
    "CorenessTable",
    "DEFAULT_BUDGET",
    "EmptyGraphError",
    "ExperimentConfig",
    "ExperimentResult",
    "Graph",
    "GraphParseError",
    "GrowthRule",
    "RemovalOrder",
    "RunRecord",
    "SearchResult",
    "Strategy",
    "StrategyParams",
    "best_core_upper_bound",
    "best_core_upper_bound_by_component",
    "bfs_connected_subset",
    "bottom_up_candidates",
    "connected_components",
    "core_decompose",
    "critical_search",
    "exact_search",
    "gnp_random_graph",
    "grow_refinement",
    "induced_min_degree",
    "kcore_of_subset",
    "largest_component_subgraph",
    "load_edge_list",
    "maximal_k_cores",
    "parse_edge_list",
    "resolve_t",
    "run_experiment",
    "run_experiment_on_graph",
    "sgreedy_search",
    "shrink_refinement",
    "single_run",
    "sized_core_search",
    "top_down_candidates",
]
