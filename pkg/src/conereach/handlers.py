"""Operation layer shared by the HTTP service and the CLI.

Each handler takes a validated request model, runs the core library, and
returns a response model; the FastAPI routes and the CLI subcommands are both
thin clients of these functions.
"""

from __future__ import annotations

from .analysis import (
    Verdict, check_null_controllability, check_reachability,
)
from .linreach import reach_subspace
from .models import (
    AnalyzeRequest, AnalyzeResponse, ConeModel, DualResponse, InfoResponse,
    OracleRequest, OracleResponse, SimulateRequest, SimulateResponse,
    SystemFileModel, VerdictModel,
)
from .oracle import Direction, INFEASIBLE, feasible_chain, k_step_set, sample_trajectory
from .rational import rat, rat_str

DEFAULT_REFINE_DEPTH = 64


def _verdict_model(verdict: Verdict) -> VerdictModel:
    return VerdictModel.model_validate(verdict.to_json())


def _effective_refine_depth(req_depth, file_model: SystemFileModel) -> int:
    if req_depth is not None:
        return req_depth
    if file_model.options and file_model.options.refine_depth is not None:
        return file_model.options.refine_depth
    return DEFAULT_REFINE_DEPTH


def _effective_steps(req_steps, file_model: SystemFileModel, n: int) -> int:
    if req_steps is not None:
        return req_steps
    if file_model.options and file_model.options.max_steps is not None:
        return file_model.options.max_steps
    return 4 * n  # subspace parts saturate within n; conic parts get headroom


def handle_analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    process = req.input.to_process()
    depth = _effective_refine_depth(req.refine_depth, req.input)
    if req.check == "all" and req.input.options and req.input.options.checks:
        requested = list(dict.fromkeys(req.input.options.checks))
    elif req.check == "all":
        requested = ["reach", "null"]
    else:
        requested = [req.check]
    verdicts = []
    for kind in requested:
        if kind == "reach":
            verdicts.append(check_reachability(process, refine_depth=depth))
        else:
            verdicts.append(check_null_controllability(process, refine_depth=depth))
    return AnalyzeResponse(verdicts=[_verdict_model(v) for v in verdicts])


def handle_oracle(req: OracleRequest) -> OracleResponse:
    process = req.input.to_process()
    steps = _effective_steps(req.steps, req.input, process.n)
    if req.direction == "feasible":
        result = feasible_chain(process, steps)
    else:
        direction = Direction.REACH if req.direction == "reach" else Direction.NULL
        result = k_step_set(process, steps, direction)
    return OracleResponse(
        direction=req.direction,
        cones=[ConeModel.from_cone(c) for c in result.cones],
        saturated_at=result.saturated_at,
        steps=steps,
    )


def handle_simulate(req: SimulateRequest) -> SimulateResponse:
    process = req.input.to_process()
    x0 = [rat(v) for v in req.x0]
    if len(x0) != process.n:
        raise ValueError(f"x0: expected {process.n} entries, got {len(x0)}")
    result = sample_trajectory(process, x0, req.steps, seed=req.seed)
    if result == INFEASIBLE:
        return SimulateResponse(infeasible=True, trajectory=None)
    return SimulateResponse(infeasible=False, trajectory=result)


def handle_dual(file_model: SystemFileModel) -> DualResponse:
    process = file_model.to_process()
    dual = process.dual()
    return DualResponse(n=dual.n, graph=ConeModel.from_cone(dual.graph))


def handle_info(file_model: SystemFileModel) -> InfoResponse:
    process = file_model.to_process()
    lm, lp = process.linear_bounds()
    r_minus, s1 = reach_subspace(lm)
    r_plus, s2 = reach_subspace(lp)
    n_minus, s3 = reach_subspace(lm, backward=True)
    fmt_basis = lambda s: [[rat_str(x) for x in v] for v in s.basis_vectors()]
    return InfoResponse(
        n=process.n,
        dom=ConeModel.from_cone(process.dom()),
        im=ConeModel.from_cone(process.im()),
        strict=process.is_strict(),
        l_minus_graph=fmt_basis(lm.graph),
        l_plus_graph=fmt_basis(lp.graph),
        r_minus=fmt_basis(r_minus),
        r_plus=fmt_basis(r_plus),
        n_minus=fmt_basis(n_minus),
        steps={"r_minus": s1, "r_plus": s2, "n_minus": s3},
    )
