"""Request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Algorithm = Literal["td", "bu", "critical", "sgreedy", "oracle"]


class GraphSource(BaseModel):
    """Where a graph comes from: a server-readable path or inline text."""

    name: str | None = None
    path: str | None = None
    text: str | None = None
    lcc: bool = True


class GraphInfo(BaseModel):
    graph_id: str
    name: str
    n: int
    m: int
    degeneracy: int
    lcc: bool
    decomp_ms: float


class SearchOptions(BaseModel):
    restarts: int = Field(default=1, ge=1)
    bu_growth: Literal["max", "random"] = "max"
    bu_order: Literal["largest", "random"] = "largest"
    td_order: Literal["random", "lowdeg"] = "random"


class SearchRequest(BaseModel):
    algorithm: Algorithm
    t: int | None = None
    t_frac: float | None = None
    seed: int = 0
    options: SearchOptions = SearchOptions()
    oracle_budget: int = Field(default=10_000_000, ge=1)
    include_nodes: bool = True


class SearchResponse(BaseModel):
    algorithm: str
    t: int
    seed: int
    core_number: int
    upper_bound: int
    optimal: bool
    elapsed_ms: float
    nodes: list[str] | None = None
    note: str | None = None


class UpperBoundResponse(BaseModel):
    t: int
    upper_bound: int
    per_component: bool


class ExperimentRequest(BaseModel):
    """Graph by stored id, server path, or inline text, plus the protocol."""

    graph_id: str | None = None
    path: str | None = None
    text: str | None = None
    name: str | None = None
    lcc: bool = True
    algorithm: Algorithm
    t: int | None = None
    t_frac: float | None = None
    repetitions: int = Field(default=200, ge=1)
    base_seed: int = 0
    options: SearchOptions = SearchOptions()
    oracle_budget: int = Field(default=10_000_000, ge=1)
    include_nodes: bool = False


class RunRow(BaseModel):
    rep: int
    seed: int
    core_number: int
    upper_bound: int
    optimal: bool
    elapsed_ms: float
    nodes: list[str] | None = None


class ExperimentSummary(BaseModel):
    mean_core_number: float
    mean_elapsed_ms: float
    optimal_fraction: float


class ExperimentResponse(BaseModel):
    dataset: str
    algorithm: str
    n: int
    m: int
    t: int
    upper_bound: int
    decomp_ms: float
    rows: list[RunRow]
    summary: ExperimentSummary
    csv: str
    note: str | None = None


class ErrorBody(BaseModel):
    code: Literal["config", "parse", "budget", "not_found", "internal"]
    message: str
    line: int | None = None


class ErrorResponse(BaseModel):
    error: ErrorBody
