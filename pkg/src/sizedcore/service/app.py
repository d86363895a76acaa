"""FastAPI service: load graphs once, serve many seeded searches.

Core decomposition happens at load time and is reused by every search
against a stored graph. All domain errors surface as JSON bodies with a
stable ``error.code`` so clients can map them to exit codes.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .. import __version__
from ..bench import resolve_t, run_experiment_on_graph, single_run
from ..coreness import (
    CorenessTable,
    best_core_upper_bound,
    best_core_upper_bound_by_component,
    core_decompose,
)
from ..engine import (
    CandidateOrder,
    GrowthRule,
    RemovalOrder,
    Strategy,
    StrategyParams,
)
from ..errors import BudgetExceededError, EmptyGraphError, GraphParseError
from ..graph import Graph, load_edge_list, parse_edge_list
from .schemas import (
    ExperimentRequest,
    ExperimentResponse,
    ExperimentSummary,
    GraphInfo,
    GraphSource,
    RunRow,
    SearchOptions,
    SearchRequest,
    SearchResponse,
    UpperBoundResponse,
)

SGREEDY_NOTE = (
    "sgreedy is a reconstructed greedy-expansion baseline "
    "(no published pseudocode for this setting); see README"
)


class GraphNotFoundError(KeyError):
    pass


@dataclass
class GraphEntry:
    graph: Graph
    table: CorenessTable
    info: GraphInfo


class GraphStore:
    """Thread-safe id -> GraphEntry map."""

    def __init__(self):
        self._lock = threading.Lock()
        self._entries: dict[str, GraphEntry] = {}

    def add(self, entry: GraphEntry) -> None:
        with self._lock:
            self._entries[entry.info.graph_id] = entry

    def get(self, graph_id: str) -> GraphEntry:
        with self._lock:
            entry = self._entries.get(graph_id)
        if entry is None:
            raise GraphNotFoundError(f"no graph with id {graph_id!r}")
        return entry

    def remove(self, graph_id: str) -> None:
        with self._lock:
            if self._entries.pop(graph_id, None) is None:
                raise GraphNotFoundError(f"no graph with id {graph_id!r}")

    def list(self) -> list[GraphEntry]:
        with self._lock:
            return list(self._entries.values())


def params_from_options(
    options: SearchOptions, strategy: Strategy = Strategy.TOP_DOWN
) -> StrategyParams:
    return StrategyParams(
        strategy=strategy,
        bu_candidate_order=CandidateOrder(options.bu_order),
        bu_growth_rule=GrowthRule(options.bu_growth),
        td_removal_order=RemovalOrder(options.td_order),
        max_restarts_per_k=options.restarts,
    )


def _error(status: int, code: str, message: str, line: int | None = None):
    body = {"error": {"code": code, "message": message}}
    if line is not None:
        body["error"]["line"] = line
    return JSONResponse(status_code=status, content=body)


def _load_graph(
    path: str | None, text: str | None, name: str | None, lcc: bool
) -> tuple[Graph, str]:
    if (path is None) == (text is None):
        raise ValueError("exactly one of path and text is required")
    if path is not None:
        g = load_edge_list(path, restrict_to_lcc=lcc)
        return g, name or path.rsplit("/", 1)[-1].rsplit(".", 1)[0]
    g = parse_edge_list(text, restrict_to_lcc=lcc)
    return g, name or "inline"


def _labels(g: Graph, nodes) -> list[str]:
    return [str(g.labels[v]) for v in sorted(nodes)]


def create_app() -> FastAPI:
    app = FastAPI(title="sizedcore", version=__version__)
    store = GraphStore()
    app.state.store = store

    @app.exception_handler(GraphParseError)
    async def on_parse_error(request: Request, exc: GraphParseError):
        return _error(400, "parse", str(exc), line=exc.line)

    @app.exception_handler(EmptyGraphError)
    async def on_empty_graph(request: Request, exc: EmptyGraphError):
        return _error(400, "parse", str(exc))

    @app.exception_handler(BudgetExceededError)
    async def on_budget(request: Request, exc: BudgetExceededError):
        return _error(400, "budget", str(exc))

    @app.exception_handler(GraphNotFoundError)
    async def on_not_found(request: Request, exc: GraphNotFoundError):
        return _error(404, "not_found", str(exc.args[0]))

    @app.exception_handler(ValueError)
    async def on_value_error(request: Request, exc: ValueError):
        return _error(400, "config", str(exc))

    @app.exception_handler(OSError)
    async def on_os_error(request: Request, exc: OSError):
        return _error(400, "config", str(exc))

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/graphs", response_model=GraphInfo, status_code=201)
    def add_graph(source: GraphSource):
        g, name = _load_graph(source.path, source.text, source.name, source.lcc)
        t0 = time.perf_counter()
        table = core_decompose(g)
        decomp_ms = (time.perf_counter() - t0) * 1000.0
        info = GraphInfo(
            graph_id=uuid.uuid4().hex[:12],
            name=name,
            n=g.n,
            m=g.m,
            degeneracy=table.degeneracy,
            lcc=source.lcc,
            decomp_ms=decomp_ms,
        )
        store.add(GraphEntry(graph=g, table=table, info=info))
        return info

    @app.get("/graphs", response_model=list[GraphInfo])
    def list_graphs():
        return [e.info for e in store.list()]

    @app.get("/graphs/{graph_id}", response_model=GraphInfo)
    def get_graph(graph_id: str):
        return store.get(graph_id).info

    @app.delete("/graphs/{graph_id}", status_code=204)
    def delete_graph(graph_id: str):
        store.remove(graph_id)
        return Response(status_code=204)

    @app.get("/graphs/{graph_id}/upper-bound", response_model=UpperBoundResponse)
    def upper_bound(
        graph_id: str,
        t: int | None = None,
        t_frac: float | None = None,
        per_component: bool = False,
    ):
        entry = store.get(graph_id)
        tval = resolve_t(entry.graph.n, t, t_frac)
        if per_component:
            kbar = best_core_upper_bound_by_component(entry.graph, entry.table, tval)
        else:
            kbar = best_core_upper_bound(entry.table, tval)
        return UpperBoundResponse(t=tval, upper_bound=kbar, per_component=per_component)

    @app.post(
        "/graphs/{graph_id}/search",
        response_model=SearchResponse,
        response_model_exclude_none=True,
    )
    def search(graph_id: str, req: SearchRequest):
        entry = store.get(graph_id)
        g = entry.graph
        tval = resolve_t(g.n, req.t, req.t_frac)
        record = single_run(
            g,
            entry.table,
            req.algorithm,
            tval,
            req.seed,
            strategy_params=params_from_options(req.options),
            oracle_budget=req.oracle_budget,
        )
        return SearchResponse(
            algorithm=req.algorithm,
            t=tval,
            seed=req.seed,
            core_number=record.core_number,
            upper_bound=record.upper_bound,
            optimal=record.optimal,
            elapsed_ms=record.elapsed_ms,
            nodes=_labels(g, record.nodes) if req.include_nodes else None,
            note=SGREEDY_NOTE if req.algorithm == "sgreedy" else None,
        )

    @app.post("/experiments", response_model=ExperimentResponse)
    def experiment(req: ExperimentRequest):
        if req.graph_id is not None:
            entry = store.get(req.graph_id)
            g, dataset = entry.graph, entry.info.name
        else:
            g, dataset = _load_graph(req.path, req.text, req.name, req.lcc)
        result = run_experiment_on_graph(
            g,
            dataset=dataset,
            algorithm=req.algorithm,
            t=req.t,
            t_frac=req.t_frac,
            repetitions=req.repetitions,
            base_seed=req.base_seed,
            strategy_params=params_from_options(req.options),
            oracle_budget=req.oracle_budget,
        )
        rows = [
            RunRow(
                rep=r.rep,
                seed=r.seed,
                core_number=r.core_number,
                upper_bound=r.upper_bound,
                optimal=r.optimal,
                elapsed_ms=r.elapsed_ms,
                nodes=_labels(g, r.nodes) if req.include_nodes else None,
            )
            for r in result.rows
        ]
        return ExperimentResponse(
            dataset=result.dataset,
            algorithm=result.algorithm,
            n=result.n,
            m=result.m,
            t=result.t,
            upper_bound=result.upper_bound,
            decomp_ms=result.decomp_ms,
            rows=rows,
            summary=ExperimentSummary(
                mean_core_number=result.mean_core_number,
                mean_elapsed_ms=result.mean_elapsed_ms,
                optimal_fraction=result.optimal_fraction,
            ),
            csv=result.to_csv(),
            note=SGREEDY_NOTE if req.algorithm == "sgreedy" else None,
        )

    return app


app = create_app()


def serve() -> None:
    """Console entry point: run the service under uvicorn."""
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(
        prog="sizedcore-serve", description="Serve the sizedcore HTTP API"
    )
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run(app, host=args.host, port=args.port)
