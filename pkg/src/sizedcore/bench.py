"""Seeded repeated-run experiment harness with CSV emission.

An experiment loads a graph once, decomposes it once (timed
separately), then runs the chosen algorithm ``repetitions`` times with
seeds base_seed, base_seed+1, ... Each run becomes one CSV data row;
a trailing summary row carries the means and the optimal fraction.
"""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass, replace
from pathlib import Path

from .baselines import critical_search, sgreedy_search
from .coreness import CorenessTable, best_core_upper_bound, core_decompose
from .engine import Strategy, StrategyParams, sized_core_search
from .exact import DEFAULT_BUDGET, exact_search
from .graph import Graph, load_edge_list

ALGORITHMS = ("td", "bu", "critical", "sgreedy", "oracle")

CSV_COLUMNS = (
    "dataset",
    "algorithm",
    "n",
    "m",
    "t",
    "rep",
    "seed",
    "core_number",
    "upper_bound",
    "optimal",
    "elapsed_ms",
    "decomp_ms",
)


def resolve_t(n: int, t: int | None = None, t_frac: float | None = None) -> int:
    """Resolve an absolute or fractional size request against n.

    Exactly one of ``t`` and ``t_frac`` must be given; fractions are
    rounded half up and clamped to [1, n].
    """
    if (t is None) == (t_frac is None):
        raise ValueError("exactly one of t and t_frac is required")
    if t_frac is not None:
        if not 0.0 < t_frac <= 1.0:
            raise ValueError(f"t_frac={t_frac} outside (0, 1]")
        value = int(math.floor(t_frac * n + 0.5))
        return min(max(value, 1), n)
    assert t is not None
    if not 1 <= t <= n:
        raise ValueError(f"t={t} outside [1, {n}]")
    return t


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to reproduce one experiment."""

    input_path: str
    algorithm: str
    t: int | None = None
    t_frac: float | None = None
    repetitions: int = 200
    base_seed: int = 0
    lcc: bool = True
    output_path: str | None = None
    strategy_params: StrategyParams = StrategyParams()
    oracle_budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if (self.t is None) == (self.t_frac is None):
            raise ValueError("exactly one of t and t_frac is required")


@dataclass(frozen=True)
class RunRecord:
    """One data row; ``nodes`` holds internal ids in ascending order."""

    rep: int
    seed: int
    core_number: int
    upper_bound: int
    optimal: bool
    elapsed_ms: float
    nodes: tuple[int, ...]


@dataclass(frozen=True)
class ExperimentResult:
    dataset: str
    algorithm: str
    n: int
    m: int
    t: int
    upper_bound: int
    decomp_ms: float
    rows: tuple[RunRecord, ...]

    @property
    def mean_core_number(self) -> float:
        return sum(r.core_number for r in self.rows) / len(self.rows)

    @property
    def mean_elapsed_ms(self) -> float:
        # mean of the row values as they appear in the CSV, so the
        # summary stays recomputable from the emitted rows
        return sum(float(f"{r.elapsed_ms:.3f}") for r in self.rows) / len(self.rows)

    @property
    def optimal_fraction(self) -> float:
        return sum(1 for r in self.rows if r.optimal) / len(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        base = [self.dataset, self.algorithm, self.n, self.m, self.t]
        for r in self.rows:
            writer.writerow(
                base
                + [
                    r.rep,
                    r.seed,
                    r.core_number,
                    r.upper_bound,
                    int(r.optimal),
                    f"{r.elapsed_ms:.3f}",
                    f"{self.decomp_ms:.3f}",
                ]
            )
        writer.writerow(
            base
            + [
                "summary",
                "",
                self.mean_core_number,
                self.upper_bound,
                self.optimal_fraction,
                self.mean_elapsed_ms,
                f"{self.decomp_ms:.3f}",
            ]
        )
        return buf.getvalue()

    def write_csv(self, path: str | Path) -> None:
        Path(path).write_text(self.to_csv(), encoding="utf-8")


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Load the input, run all repetitions, optionally write the CSV."""
    g = load_edge_list(config.input_path, restrict_to_lcc=config.lcc)
    result = run_experiment_on_graph(
        g,
        dataset=Path(config.input_path).stem,
        algorithm=config.algorithm,
        t=config.t,
        t_frac=config.t_frac,
        repetitions=config.repetitions,
        base_seed=config.base_seed,
        strategy_params=config.strategy_params,
        oracle_budget=config.oracle_budget,
    )
    if config.output_path:
        result.write_csv(config.output_path)
    return result


def run_experiment_on_graph(
    g: Graph,
    *,
    dataset: str,
    algorithm: str,
    t: int | None = None,
    t_frac: float | None = None,
    repetitions: int = 200,
    base_seed: int = 0,
    strategy_params: StrategyParams | None = None,
    oracle_budget: int = DEFAULT_BUDGET,
) -> ExperimentResult:
    """Run an experiment against an already-loaded graph."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    tval = resolve_t(g.n, t, t_frac)
    t0 = time.perf_counter()
    table = core_decompose(g)
    decomp_ms = (time.perf_counter() - t0) * 1000.0
    kbar = best_core_upper_bound(table, tval)
    params = strategy_params or StrategyParams()
    rows = []
    for rep in range(repetitions):
        seed = base_seed + rep
        rows.append(
            single_run(
                g,
                table,
                algorithm,
                tval,
                seed,
                rep=rep,
                kbar=kbar,
                strategy_params=params,
                oracle_budget=oracle_budget,
            )
        )
    return ExperimentResult(
        dataset=dataset,
        algorithm=algorithm,
        n=g.n,
        m=g.m,
        t=tval,
        upper_bound=kbar,
        decomp_ms=decomp_ms,
        rows=tuple(rows),
    )


def single_run(
    g: Graph,
    table: CorenessTable,
    algorithm: str,
    tval: int,
    seed: int,
    *,
    rep: int = 0,
    kbar: int | None = None,
    strategy_params: StrategyParams | None = None,
    oracle_budget: int = DEFAULT_BUDGET,
) -> RunRecord:
    """One seeded run of any algorithm, reduced to a RunRecord."""
    if kbar is None:
        kbar = best_core_upper_bound(table, tval)
    params = strategy_params or StrategyParams()
    if algorithm == "oracle":
        t1 = time.perf_counter()
        best, witness = exact_search(g, tval, budget=oracle_budget)
        elapsed_ms = (time.perf_counter() - t1) * 1000.0
        return RunRecord(
            rep, seed, best, kbar, best == kbar, elapsed_ms, tuple(sorted(witness))
        )
    if algorithm == "td":
        res = sized_core_search(
            g, tval, replace(params, strategy=Strategy.TOP_DOWN), seed, table
        )
    elif algorithm == "bu":
        res = sized_core_search(
            g, tval, replace(params, strategy=Strategy.BOTTOM_UP), seed, table
        )
    elif algorithm == "critical":
        res = critical_search(g, tval, seed=seed, table=table)
    elif algorithm == "sgreedy":
        res = sgreedy_search(g, tval, seed=seed, table=table)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return RunRecord(
        rep,
        seed,
        res.core_number,
        res.upper_bound,
        res.optimal,
        res.elapsed * 1000.0,
        tuple(sorted(res.nodes)),
    )
