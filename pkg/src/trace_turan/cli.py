"""Batch command line front end.

Exit codes: 0 success, 2 usage error or size refusal, 3 parse error,
4 internal contract violation (a structural check fired on an input the
exact detector confirms trace-free -- should never happen).
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Sequence

from .bounds import derivation_check, log_grid
from .constructions import dumps_graph, greedy_lower_bound, lift_to_trace_free, polarity_graph
from .hypergraph import FormatError, dumps_hypergraph, read_hypergraph
from .lemma_checks import lemma_status_report
from .search import CapExceeded, SearchConfig, turan_oracle, turan_search
from .traces import SearchTimeout, contains_trace

DEFAULT_SEED = 20240901


@dataclasses.dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    t: int | None = None
    delta: int | None = None
    q: int | None = None
    seed: int = DEFAULT_SEED
    threads: int = 0
    time_budget: float | None = None
    input_path: str | None = None
    output_path: str | None = None
    fmt: str = "csv"


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_search(cfg: RunConfig, args: argparse.Namespace) -> int:
    try:
        if args.oracle:
            result = turan_oracle(cfg.n, cfg.t)
        else:
            result = turan_search(
                cfg.n,
                cfg.t,
                SearchConfig(max_n=args.cap, witness_cap=args.witness_cap, threads=cfg.threads),
            )
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json-lines":
        payload = {
            "n": result.n,
            "t": result.t,
            "value": result.value,
            "witnesses": len(result.witnesses),
            "nodes": result.nodes_explored,
            "seconds": round(result.elapsed, 3),
        }
        _emit(json.dumps(payload) + "\n", cfg.output_path)
    elif cfg.fmt == "text":
        lines = [f"maximum edges for n={result.n}, t={result.t}: {result.value}"]
        lines += [dumps_hypergraph(w) for w in result.witnesses]
        _emit("\n".join(lines), cfg.output_path)
    else:
        _emit("n,t,value,witness_count,nodes,seconds\n" + result.csv_row() + "\n", cfg.output_path)
    return 0


def _cmd_check(cfg: RunConfig) -> int:
    try:
        h = read_hypergraph(cfg.input_path)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    try:
        cert = contains_trace(h, cfg.t, time_budget=cfg.time_budget)
    except SearchTimeout:
        print("unknown: time budget exhausted", file=sys.stderr)
        return 2
    _emit(cert.to_text() if cert is not None else "trace-free\n", cfg.output_path)
    return 0


def _cmd_construct(cfg: RunConfig, args: argparse.Namespace) -> int:
    if args.kind == "polarity":
        try:
            g = polarity_graph(cfg.q)
        except ValueError as exc:
            print(f"refused: {exc}", file=sys.stderr)
            return 2
        text = dumps_hypergraph(lift_to_trace_free(g)) if args.lift else dumps_graph(g)
    else:
        h = greedy_lower_bound(cfg.n, cfg.t, seed=cfg.seed, restarts=args.restarts)
        text = dumps_hypergraph(h)
    _emit(text, cfg.output_path)
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    try:
        h = read_hypergraph(cfg.input_path)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    report = lemma_status_report(h, cfg.t, cfg.delta, seed=cfg.seed)
    lines = []
    violated = False
    for status in report:
        entry = {"check": status.check, "status": status.status, "detail": status.detail}
        if status.violations:
            violated = True
            entry["violations"] = [
                {
                    "subject": list(v.subject),
                    "observed": v.observed,
                    "bound": v.bound,
                    "note": v.note,
                    "certificate": v.certificate.to_text() if v.certificate else None,
                }
                for v in status.violations
            ]
        lines.append(json.dumps(entry))
    _emit("\n".join(lines) + "\n", cfg.output_path)
    if violated and contains_trace(h, cfg.t) is None:
        print("internal contract violation: check fired on a trace-free input", file=sys.stderr)
        return 4
    return 0


def _cmd_bounds(cfg: RunConfig, args: argparse.Namespace) -> int:
    lo, _, hi = args.t_range.partition(":")
    grid = log_grid(float(lo), float(hi), args.points)
    rows = ["t,lhs_hi,rhs_lo,certified"]
    for point in derivation_check(grid):
        rows.append(
            f"{point.t},{point.lhs_hi!r},{point.rhs_lo!r},{str(point.certified).lower()}"
        )
    rows.append("")
    _emit("\n".join(rows), cfg.output_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trace-turan",
        description="Exact search, detection and verification for forbidden-pattern traces",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("search", help="exact maximum edge count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="use the enumeration oracle (n <= 6)")
    p.add_argument("--cap", type=int, default=12, help="refusal cap for the search")
    p.add_argument("--witness-cap", type=int, default=100)
    p.add_argument("--format", choices=("csv", "text", "json-lines"), default="csv")
    p.add_argument("--output")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=0)

    p = sub.add_parser("check", help="trace detection with certificate output")
    p.add_argument("--file", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--output")

    p = sub.add_parser("construct", help="lower-bound constructions")
    p.add_argument("kind", choices=("polarity", "greedy"))
    p.add_argument("--q", type=int, help="prime order for the polarity construction")
    p.add_argument("--lift", action="store_true", help="lift the graph to a 3-uniform hypergraph")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--output")

    p = sub.add_parser("verify", help="run the structural check suite on a hypergraph file")
    p.add_argument("--file", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--delta", type=int, default=14)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--output")

    p = sub.add_parser("bounds", help="derivation-check table over a t range")
    p.add_argument("--t-range", default="14:1000000", help="lo:hi, log-uniform grid")
    p.add_argument("--points", type=int, default=1000)
    p.add_argument("--output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        t=getattr(args, "t", None),
        delta=getattr(args, "delta", None),
        q=getattr(args, "q", None),
        seed=getattr(args, "seed", DEFAULT_SEED),
        threads=getattr(args, "threads", 0),
        time_budget=getattr(args, "time_budget", None),
        input_path=getattr(args, "file", None),
        output_path=getattr(args, "output", None),
        fmt=getattr(args, "format", "csv"),
    )
    if cfg.subcommand == "search":
        return _cmd_search(cfg, args)
    if cfg.subcommand == "check":
        return _cmd_check(cfg)
    if cfg.subcommand == "construct":
        if args.kind == "polarity" and cfg.q is None:
            print("construct polarity needs --q", file=sys.stderr)
            return 2
        if args.kind == "greedy" and (cfg.n is None or cfg.t is None):
            print("construct greedy needs --n and --t", file=sys.stderr)
            return 2
        return _cmd_construct(cfg, args)
    if cfg.subcommand == "verify":
        return _cmd_verify(cfg)
    return _cmd_bounds(cfg, args)


if __name__ == "__main__":
    sys.exit(main())
