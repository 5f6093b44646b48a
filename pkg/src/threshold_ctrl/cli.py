"""Command-line front end.

Every subcommand prints one JSON document on stdout.  Exit status is 0 on
success (or a positive decision), 1 on a negative decision and 2 on bad
input, with a one-line diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .antiregular import (
    DisconnectedGraphError,
    certify_distinct_spectrum,
    combine,
    graph_stats,
    interlacing_check,
    theorem6_check,
)
from .control import (
    ControlMatrix,
    check_all,
    design_binary_B,
    design_terminal_B,
    kalman_check,
    min_controllers,
    pbh_check,
    theorem4_check,
)
from .exactla import eig_sym_float
from .spectra import eigvecs_algorithm1
from .sweeps import run_all
from .threshold import (
    NotThresholdError,
    ThresholdGraph,
    graph_from_degrees,
    graph_from_string,
    parse_string,
)

MAX_K_ENV = "THRESHOLD_CTRL_MAX_K"
DEFAULT_MAX_K = 10


class InputError(Exception):
    pass


def _float(x: float) -> float:
    return float(f"{x:.12g}")


def _emit(obj) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _read_json(source: str):
    """``source`` is inline JSON, ``-`` for stdin, or a file path."""
    text = source.strip()
    if source == "-":
        text = sys.stdin.read()
    elif not text.startswith(("{", "[")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {source}: {exc.msg}") from None


def _parse_degrees(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x]
    except ValueError:
        raise InputError(f"degrees must be comma-separated integers: {text!r}") from None


def _graph_from_json(obj) -> ThresholdGraph:
    if isinstance(obj, dict):
        if "string" in obj:
            return graph_from_string(parse_string(obj["string"]))
        if "degrees" in obj:
            return graph_from_degrees(obj["degrees"])
        if "laplacian" in obj:
            L = obj["laplacian"]
            return graph_from_degrees([row[i] for i, row in enumerate(L)])
    if isinstance(obj, (list, str)):
        return graph_from_string(parse_string(obj))
    raise InputError("graph JSON needs 'string', 'degrees' or 'laplacian'")


def _load_graph(args) -> ThresholdGraph:
    given = [x for x in (args.string, args.degrees, args.graph) if x is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --string, --degrees, --graph")
    if args.string is not None:
        return graph_from_string(parse_string(args.string))
    if args.degrees is not None:
        return graph_from_degrees(_parse_degrees(args.degrees))
    return _graph_from_json(_read_json(args.graph))


def _load_B(source: str, k: int) -> ControlMatrix:
    obj = _read_json(source)
    if isinstance(obj, list):
        obj = {"B": obj}
    if not isinstance(obj, dict):
        raise InputError("control matrix JSON must be an object or a list of rows")
    B = ControlMatrix.from_json(obj, k)
    if B.k != k:
        raise InputError(f"B has {B.k} rows but the graph has {k} vertices")
    return B


def _min_controllers(g: ThresholdGraph) -> dict:
    return {kind: min_controllers(g.degrees, kind) for kind in ("binary", "terminal")}


# -- subcommands ------------------------------------------------------------


def cmd_build(args) -> int:
    _emit(_load_graph(args).to_json())
    return 0


def cmd_eigvecs(args) -> int:
    g = _load_graph(args)
    out = {"k": g.k, "string": g.to_json()["string"]}
    out.update(eigvecs_algorithm1(g.laplacian).to_json())
    _emit(out)
    return 0


def cmd_check(args) -> int:
    g = _load_graph(args)
    B = _load_B(args.B, g.k)
    if args.method == "all":
        reports = check_all(g.string, B)
        verdict = next(iter(reports.values())).controllable
        out = {"controllable": verdict, "method": "all",
               "methods": {name: r.to_json() for name, r in reports.items()}}
        if not verdict:
            out["witness"] = reports["pbh"].witness
            out["eigenvalue"] = reports["pbh"].eigenvalue
            if "theorem4" in reports:
                out["failing_substring"] = reports["theorem4"].to_json()["failing_substring"]
    else:
        if args.method == "theorem4":
            report = theorem4_check(g.string, B)
        elif args.method == "pbh":
            report = pbh_check(g.laplacian, eigvecs_algorithm1(g.laplacian), B)
        else:
            report = kalman_check(g.laplacian, B)
        verdict = report.controllable
        out = report.to_json()
    out["min_controllers"] = _min_controllers(g)
    _emit(out)
    return 0 if verdict else 1


def cmd_design(args) -> int:
    g = _load_graph(args)
    B = design_binary_B(g.degrees) if args.kind == "binary" else design_terminal_B(g.degrees)
    out = {"k": g.k, "string": g.to_json()["string"]}
    out.update(B.to_json())
    out["min_controllers"] = _min_controllers(g)
    _emit(out)
    return 0


def cmd_combine(args) -> int:
    cg = combine(args.k)
    out = cg.to_json()
    diameter, max_degree = graph_stats(cg.L)
    out["stats"] = {"diameter": diameter, "max_degree": max_degree}
    status = 0
    if args.certify:
        distinct = certify_distinct_spectrum(cg)
        out["certified_distinct"] = distinct
        out["interlacing"] = interlacing_check(cg, 1e-9)
        out["nonzero_entries"] = theorem6_check(cg) if distinct else False
        out["eigenvalues"] = [_float(x) for x in eig_sym_float(cg.L)]
        if not (distinct and out["interlacing"] and out["nonzero_entries"]):
            status = 1
    _emit(out)
    return status


def cmd_stats(args) -> int:
    if args.k is not None:
        if any(x is not None for x in (args.string, args.degrees, args.graph)):
            raise InputError("--k cannot be combined with another graph source")
        L = combine(args.k).L
    elif args.graph is not None and args.string is None and args.degrees is None:
        obj = _read_json(args.graph)
        L = obj["laplacian"] if isinstance(obj, dict) and "laplacian" in obj else _graph_from_json(obj).laplacian
    else:
        L = _load_graph(args).laplacian
    diameter, max_degree = graph_stats(L)
    _emit({"k": len(L), "diameter": diameter, "max_degree": max_degree})
    return 0


def sweep_cap() -> int:
    raw = os.environ.get(MAX_K_ENV)
    if raw is None:
        return DEFAULT_MAX_K
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{MAX_K_ENV} must be an integer, got {raw!r}") from None
    if cap < 2:
        raise InputError(f"{MAX_K_ENV} must be at least 2")
    return cap


def cmd_sweep(args) -> int:
    cap = sweep_cap()
    max_k = args.max_k
    if max_k < 2:
        raise InputError("--max-k must be at least 2")
    if max_k > cap:
        print(f"note: --max-k {max_k} capped to {cap} by {MAX_K_ENV}", file=sys.stderr)
        max_k = cap
    results = run_all(max_k, samples=args.samples, seed=args.seed)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{r.name:<{width}}  {r.cases:>7}  {'ok' if r.ok else 'FAIL':<4}  {r.seconds:8.2f}s",
              file=sys.stderr)
    ok = all(r.ok for r in results)
    _emit({"max_k": max_k, "ok": ok, "suites": [r.to_json() for r in results]})
    return 0 if ok else 1


# -- argument parsing -------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--string", help="construction string, e.g. 0011000101")
    p.add_argument("--degrees", help="comma-separated threshold degree sequence")
    p.add_argument("--graph", help="graph JSON (as printed by build): file, '-' or inline")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshold-ctrl",
        description="Threshold graph Laplacians, eigenbases and controllability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a threshold graph")
    _add_graph_args(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("eigvecs", help="integer orthogonal Laplacian eigenbasis")
    _add_graph_args(p)
    p.set_defaults(func=cmd_eigvecs)

    p = sub.add_parser("check", help="decide controllability of (L, B)")
    _add_graph_args(p)
    p.add_argument("--B", required=True, help="control matrix JSON: file, '-' or inline")
    p.add_argument("--method", choices=["theorem4", "pbh", "kalman", "all"], default="all")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("design", help="minimum controller placement")
    _add_graph_args(p)
    p.add_argument("--kind", choices=["binary", "terminal"], default="binary")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("combine", help="bridged pair of antiregular graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certify", action="store_true", help="certify the spectrum and eigenvector entries")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("stats", help="diameter and maximum degree")
    _add_graph_args(p)
    p.add_argument("--k", type=int, help="use the combined graph on k vertices")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sweep", help="run the exhaustive property suites")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--samples", type=int, default=200, help="random B per graph in the agreement suite")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, NotThresholdError, DisconnectedGraphError, ValueError, TypeError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
