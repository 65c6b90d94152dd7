"""FastAPI service exposing the analysis operations over HTTP.

Run with ``conereach serve`` or ``uvicorn conereach.service:app``. Payloads
are the same JSON documents the CLI reads from files, wrapped in a request
object; validation errors surface as 422 responses with field paths.
"""

from __future__ import annotations

from fastapi import FastAPI

from . import __version__
from .handlers import (
    handle_analyze, handle_dual, handle_info, handle_oracle, handle_simulate,
)
from .models import (
    AnalyzeRequest, AnalyzeResponse, DualResponse, InfoResponse,
    OracleRequest, OracleResponse, SimulateRequest, SimulateResponse,
    SystemFileModel,
)

app = FastAPI(
    title="conereach",
    version=__version__,
    description=(
        "Exact reachability and null-controllability analysis of difference "
        "inclusions x+ in H(x) for polyhedral convex processes. Only closed "
        "processes are representable: a non-closed process can be analyzed "
        "only through its closure."
    ),
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    return handle_analyze(req)


@app.post("/oracle", response_model=OracleResponse)
def oracle(req: OracleRequest) -> OracleResponse:
    return handle_oracle(req)


@app.post("/simulate", response_model=SimulateResponse)
def simulate(req: SimulateRequest) -> SimulateResponse:
    return handle_simulate(req)


@app.post("/dual", response_model=DualResponse)
def dual(file_model: SystemFileModel) -> DualResponse:
    return handle_dual(file_model)


@app.post("/info", response_model=InfoResponse)
def info(file_model: SystemFileModel) -> InfoResponse:
    return handle_info(file_model)
