"""Command-line front end.

Subcommands: analyze, oracle, simulate, dual, info, serve. Input files are
JSON system descriptions (see models.SystemFileModel); all exact values are
printed as rational strings, floats appear only in simulate output. Exit
codes: 0 on success, 1 on input/usage errors, 2 when --strict is set and a
verdict is INDETERMINATE.

Only closed convex processes are representable: a process with a non-closed
graph (e.g. open half-line values) can be analyzed only through its closure,
which may differ in null-controllability.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from . import __version__
from .analysis import Result
from .handlers import (
    handle_analyze, handle_dual, handle_info, handle_oracle, handle_simulate,
)
from .models import (
    AnalyzeRequest, ConeModel, OracleRequest, SimulateRequest,
    SystemFileModel, VerdictModel,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract is exit 1
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="conereach", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"conereach {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_file=True):
        if with_file:
            p.add_argument("file", help="JSON system description")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--max-steps", type=int, default=None,
                       help="iteration cap for oracle chains (default 4n)")
        p.add_argument("--refine-depth", type=int, default=None,
                       help="bisection budget per algebraic sign test (default 64)")
        p.add_argument("--certificate", action="store_true",
                       help="include full certificates in text output")
        p.add_argument("--strict", action="store_true",
                       help="exit 2 when a verdict is INDETERMINATE")

    p_analyze = sub.add_parser(
        "analyze", help="decide reachability / null-controllability",
        description="Decide reachability and/or null-controllability with "
                    "certificates. Non-closed processes are out of scope: "
                    "only their closures can be represented and analyzed.")
    add_common(p_analyze)
    p_analyze.add_argument("--check", choices=["reach", "null", "all"], default="all")

    p_oracle = sub.add_parser("oracle", help="brute-force k-step iteration chains")
    add_common(p_oracle)
    p_oracle.add_argument("--dir", choices=["reach", "null", "feasible"],
                          dest="direction", default="reach")
    p_oracle.add_argument("--steps", type=int, default=None)

    p_sim = sub.add_parser("simulate", help="sample a trajectory (float output)")
    add_common(p_sim)
    p_sim.add_argument("--x0", required=True,
                       help="comma-separated rational entries, e.g. '-1' or '1/2,3'")
    p_sim.add_argument("--steps", type=int, default=10)
    p_sim.add_argument("--seed", type=int, default=0)

    p_dual = sub.add_parser("dual", help="emit the graph of the dual process H^-")
    add_common(p_dual)

    p_info = sub.add_parser("info", help="domain, image, and linear envelopes")
    add_common(p_info)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    return parser


def _load_file(path: str) -> SystemFileModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc
    try:
        return SystemFileModel.model_validate(raw)
    except ValidationError as exc:
        lines = [f"{path}: invalid system description"]
        for err in exc.errors():
            loc = ".".join(str(p) for p in err["loc"]) or "<root>"
            lines.append(f"  {loc}: {err['msg']}")
        raise UsageError("\n".join(lines)) from exc


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


MARK_OK = "✓"
MARK_BAD = "✗"


def _format_certificate(cert: dict) -> list[str]:
    if cert is None:
        return []
    kind = cert.get("type")
    if kind == "dual_eigenpair":
        lam = cert["lambda"]
        if isinstance(lam, str):
            xi = "[" + ", ".join(cert["xi"]) + "]"
            return [f"obstruction: lambda={lam}, xi={xi}"]
        lo, hi = lam["interval"]
        minpoly = ", ".join(lam["minpoly"])
        lines = [f"obstruction: lambda in [{lo}, {hi}], minpoly coeffs [{minpoly}]"]
        for i, comp in enumerate(cert["xi"]):
            lines.append(f"  xi[{i}] = poly [{', '.join(comp['poly'])}] in lambda")
        return lines
    if kind == "r_plus_deficient":
        basis = "; ".join("(" + ", ".join(v) + ")" for v in cert["basis"]) or "{0}"
        return [f"obstruction: R_+ has dimension {cert['dim']}, basis {basis}"]
    if kind == "unresolved_intervals":
        lines = ["unresolved intervals:"]
        for iv in cert["intervals"]:
            lo, hi = iv["interval"]
            lines.append(f"  [{lo}, {hi}] with minpoly coeffs [{', '.join(iv['minpoly'])}]")
        return lines
    return [f"certificate: {json.dumps(cert, sort_keys=True)}"]


def _emit_verdicts(verdicts: list[VerdictModel], fmt: str, show_cert: bool) -> str:
    if fmt == "json":
        return _dump_json({"verdicts": [v.model_dump() for v in verdicts]})
    lines = []
    for v in verdicts:
        lines.append(f"{v.property}: {v.result}")
        for a in v.assumptions:
            mark = MARK_OK if a.satisfied else MARK_BAD
            lines.append(f"  {mark} {a.name}")
        if v.result in ("FAILS", "INDETERMINATE") or show_cert:
            lines.extend("  " + line for line in _format_certificate(v.certificate))
        if v.notes:
            lines.append(f"  note: {v.notes}")
    return "\n".join(lines)


def _format_cone(c: ConeModel) -> str:
    parts = []
    data = c.model_dump()
    for key in ("rays", "lines", "ineqs", "eqs"):
        vecs = data.get(key)
        if vecs:
            rendered = ", ".join("(" + ", ".join(v) + ")" for v in vecs)
            parts.append(f"{key}: {rendered}")
    return "; ".join(parts) if parts else "full space (no constraints)"


def cmd_analyze(args) -> int:
    file_model = _load_file(args.file)
    req = AnalyzeRequest(input=file_model, check=args.check,
                         refine_depth=args.refine_depth)
    resp = handle_analyze(req)
    print(_emit_verdicts(resp.verdicts, args.format, args.certificate))
    if args.strict and any(v.result == Result.INDETERMINATE.value for v in resp.verdicts):
        return 2
    return 0


def cmd_oracle(args) -> int:
    file_model = _load_file(args.file)
    req = OracleRequest(input=file_model, direction=args.direction,
                        steps=args.max_steps if args.steps is None else args.steps)
    resp = handle_oracle(req)
    if args.format == "json":
        print(_dump_json(resp.model_dump()))
        return 0
    label = {"reach": "H^l(0)", "null": "H^-l(0)", "feasible": "F_l"}[resp.direction]
    print(f"direction: {resp.direction} ({label}), cap {resp.steps} steps")
    for i, cone in enumerate(resp.cones):
        print(f"  l={i}: {_format_cone(cone)}")
    if resp.saturated_at is not None:
        print(f"saturated at l={resp.saturated_at}")
    else:
        print("not saturated within the step cap")
    return 0


def cmd_simulate(args) -> int:
    file_model = _load_file(args.file)
    x0 = [part.strip() for part in args.x0.split(",")]
    try:
        req = SimulateRequest(input=file_model, x0=x0, steps=args.steps, seed=args.seed)
        resp = handle_simulate(req)
    except (ValidationError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        payload = {"infeasible": resp.infeasible, "trajectory": resp.trajectory}
        print(_dump_json(payload))
        return 0
    if resp.infeasible:
        print("INFEASIBLE")
        return 0
    for k, point in enumerate(resp.trajectory):
        print(f"  x_{k} = [" + ", ".join(f"{v:.6g}" for v in point) + "]")
    return 0


def cmd_dual(args) -> int:
    file_model = _load_file(args.file)
    resp = handle_dual(file_model)
    if args.format == "json":
        print(_dump_json({"n": resp.n, "graph": resp.graph.model_dump()}))
        return 0
    print(f"dual process graph in R^{2 * resp.n}:")
    print("  " + _format_cone(resp.graph))
    return 0


def cmd_info(args) -> int:
    file_model = _load_file(args.file)
    resp = handle_info(file_model)
    if args.format == "json":
        print(_dump_json(resp.model_dump()))
        return 0
    print(f"state dimension: {resp.n}")
    print(f"strict (dom = R^n): {'yes' if resp.strict else 'no'}")
    print(f"dom(H): {_format_cone(resp.dom)}")
    print(f"im(H):  {_format_cone(resp.im)}")
    fmt_basis = lambda vs: ("{" + "; ".join("(" + ", ".join(v) + ")" for v in vs) + "}"
                            if vs else "{0}")
    print(f"graph(L_-) basis: {fmt_basis(resp.l_minus_graph)}")
    print(f"graph(L_+) basis: {fmt_basis(resp.l_plus_graph)}")
    print(f"R_- basis: {fmt_basis(resp.r_minus)} (stabilized in {resp.steps['r_minus']} steps)")
    print(f"R_+ basis: {fmt_basis(resp.r_plus)} (stabilized in {resp.steps['r_plus']} steps)")
    print(f"N_- basis: {fmt_basis(resp.n_minus)} (stabilized in {resp.steps['n_minus']} steps)")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "analyze": cmd_analyze,
            "oracle": cmd_oracle,
            "simulate": cmd_simulate,
            "dual": cmd_dual,
            "info": cmd_info,
            "serve": cmd_serve,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
