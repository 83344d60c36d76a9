"""Command-line front end.

Subcommands: ``ex`` (evaluate a closed form), ``construct`` (emit a witness
graph), ``check`` (containment test on a graph6 file), ``oracle`` (exhaustive
search), ``verify`` (formula / oracle / witness three-way sweep), and
``table`` (closed-form tables as CSV or text).

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 time budget
exhausted before the search finished.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import graphs
from .constructors import extremal_witness
from .formulas import ex_for_pattern
from .oracle import SearchConfig, oracle_ex, verify_sweep
from .patterns import ForbiddenFamily, TreePattern, contains

USAGE_ERROR, MISMATCH, BUDGET_EXHAUSTED = 1, 2, 3


@dataclass
class CliRequest:
    subcommand: str
    pattern: str | None = None
    graph_path: str | None = None
    p_spec: str | None = None
    p_max: int | None = None
    out_path: str | None = None
    json_path: str | None = None
    fmt: str = "text"
    as_json: bool = False
    audit: bool = True
    budget: float | None = None
    parallel: int = 1
    max_p: int | None = None
    plain: bool = False


def _parse_budget(text: str) -> float:
    text = text.strip().lower()
    scale = 1.0
    if text.endswith("ms"):
        scale, text = 0.001, text[:-2]
    elif text.endswith("s"):
        text = text[:-1]
    elif text.endswith("m"):
        scale, text = 60.0, text[:-1]
    return float(text) * scale


def _parse_p_values(spec: str) -> list[int]:
    spec = spec.strip()
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


def _config(req: CliRequest) -> SearchConfig:
    kwargs = {"budget": req.budget, "parallel": req.parallel}
    if req.max_p is not None:
        kwargs["max_p"] = req.max_p
    return SearchConfig(**kwargs)


def _emit_json(out, payload):
    print(json.dumps(payload, sort_keys=True), file=out)


def _cmd_ex(req: CliRequest, out) -> int:
    pattern = TreePattern.parse(req.pattern)
    (p,) = _parse_p_values(req.p_spec)
    t0 = time.perf_counter()
    val = ex_for_pattern(pattern, p)
    elapsed_ms = (time.perf_counter() - t0) * 1000
    if req.as_json:
        _emit_json(out, {"pattern": pattern.spell(), "p": p, "value": val.value,
                         "case_tag": val.case_tag, "k": val.k, "r": val.r, "m": val.m,
                         "elapsed_ms": elapsed_ms})
    else:
        parts = [f"k={val.k}" if val.k is not None else "k=-",
                 f"r={val.r}" if val.r is not None else "r=-",
                 f"m={val.m}" if val.m is not None else "m=-"]
        print(f"{val.value}  {val.case_tag}  ({', '.join(parts)})", file=out)
    return 0


def _cmd_construct(req: CliRequest, out) -> int:
    pattern = TreePattern.parse(req.pattern)
    (p,) = _parse_p_values(req.p_spec)
    t0 = time.perf_counter()
    recipe, g = extremal_witness(pattern, p, audit=req.audit)
    elapsed_ms = (time.perf_counter() - t0) * 1000
    g6 = graphs.to_graph6(g).decode("ascii")
    if req.out_path:
        with open(req.out_path, "w", encoding="ascii") as fh:
            fh.write(g6 + "\n")
    if req.as_json:
        _emit_json(out, {"pattern": pattern.spell(), "p": p, "edges": g.edge_count(),
                         "recipe": recipe.describe(), "claimed_edges": recipe.claimed_edges,
                         "graph6": g6, "out": req.out_path, "elapsed_ms": elapsed_ms})
    else:
        print(f"recipe: {recipe.describe()}", file=out)
        print(f"edges: {g.edge_count()}", file=out)
        if req.out_path:
            print(f"wrote {req.out_path}", file=out)
        else:
            print(f"graph6: {g6}", file=out)
    return 0


def _cmd_check(req: CliRequest, out) -> int:
    family = ForbiddenFamily.parse(req.pattern)
    with open(req.graph_path, "rb") as fh:
        g = graphs.from_graph6(fh.read().strip())
    hits = {}
    for pattern in sorted(family, key=lambda q: (q.kind, q.n)):
        hits[pattern.spell()] = contains(g, pattern)
    if req.as_json:
        _emit_json(out, {"graph": req.graph_path, "p": g.p, "edges": g.edge_count(),
                         "contained": hits})
    else:
        for spell, hit in hits.items():
            print(f"{spell}: {'contained' if hit else 'not contained'}", file=out)
    return 0


def _cmd_oracle(req: CliRequest, out) -> int:
    family = ForbiddenFamily.parse(req.pattern)
    (p,) = _parse_p_values(req.p_spec)
    result = oracle_ex(p, family, _config(req))
    if req.out_path:
        with open(req.out_path, "w", encoding="ascii") as fh:
            fh.write(graphs.to_graph6(result.witness).decode("ascii") + "\n")
    if req.as_json:
        _emit_json(out, {"family": family.spell(), "p": p, "value": result.value,
                         "nodes": result.nodes_explored, "exhaustive": result.exhaustive,
                         "witness_graph6": graphs.to_graph6(result.witness).decode("ascii")})
    else:
        status = "exact" if result.exhaustive else "budget exhausted (lower bound)"
        print(f"{result.value}  [{status}, {result.nodes_explored} nodes]", file=out)
    return 0 if result.exhaustive else BUDGET_EXHAUSTED


def _cmd_verify(req: CliRequest, out) -> int:
    pattern = TreePattern.parse(req.pattern)
    p_values = _parse_p_values(req.p_spec)
    report = verify_sweep(pattern, p_values, _config(req))
    payload = {"pattern": pattern.spell(),
               "rows": [{"p": row.p, "formula": row.formula.value,
                         "case_tag": row.formula.case_tag,
                         "oracle": row.oracle_value, "exhaustive": row.exhaustive,
                         "witness_edges": row.witness_edges,
                         "witness_free": row.witness_free, "ok": row.ok}
                        for row in report.rows],
               "mismatches": len(report.mismatches),
               "incomplete": len(report.incomplete)}
    if req.json_path:
        with open(req.json_path, "w", encoding="ascii") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
    if req.as_json:
        _emit_json(out, payload)
    else:
        for row in report.rows:
            mark = "ok" if row.ok else ("INCOMPLETE" if not row.exhaustive else "MISMATCH")
            print(f"p={row.p}: formula={row.formula.value} oracle={row.oracle_value} "
                  f"witness={row.witness_edges} free={row.witness_free} [{mark}]", file=out)
    if report.mismatches:
        return MISMATCH
    if report.incomplete:
        return BUDGET_EXHAUSTED
    return 0


def _cmd_table(req: CliRequest, out) -> int:
    pattern = TreePattern.parse(req.pattern)
    if req.p_spec:
        p_values = _parse_p_values(req.p_spec)
    elif req.p_max is not None:
        p_values = list(range(pattern.n, req.p_max + 1))
    else:
        raise ValueError("table needs --p or --p-max")
    rows = []
    for p in p_values:
        val = ex_for_pattern(pattern, p)
        rows.append((p, val.k, val.r, val.m, val.value, val.case_tag))
    if req.fmt == "csv":
        print("p,k,r,m,value,case_tag", file=out)
        for p, k, r, m, value, tag in rows:
            blank = lambda x: "" if x is None else str(x)
            print(f"{p},{blank(k)},{blank(r)},{blank(m)},{value},{tag}", file=out)
    else:
        print(f"{'p':>5} {'k':>4} {'r':>4} {'m':>4} {'value':>10}  case_tag", file=out)
        for p, k, r, m, value, tag in rows:
            dash = lambda x: "-" if x is None else str(x)
            print(f"{p:>5} {dash(k):>4} {dash(r):>4} {dash(m):>4} {value:>10}  {tag}", file=out)
    return 0


_COMMANDS = {
    "ex": _cmd_ex,
    "construct": _cmd_construct,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def run(request: CliRequest, out=None) -> int:
    """Dispatch a parsed request; returns the process exit code."""
    out = out if out is not None else sys.stdout
    try:
        return _COMMANDS[request.subcommand](request, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> _Parser:
    parser = _Parser(prog="turantrees",
                     description="Exact extremal edge counts and witnesses for "
                                 "forbidden star/broom/spider/path subgraphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(sp, pattern_help="pattern as kind:n (star, broom, spider, path)"):
        sp.add_argument("--pattern", required=True, help=pattern_help)
        sp.add_argument("--json", action="store_true", dest="as_json",
                        help="machine-readable output")
        sp.add_argument("--plain", action="store_true",
                        help="plain uncolored output (output is always plain; accepted for CI)")

    sp = sub.add_parser("ex", help="evaluate the closed form")
    common(sp)
    sp.add_argument("--p", required=True, dest="p_spec", help="vertex count")

    sp = sub.add_parser("construct", help="build an extremal witness graph")
    common(sp)
    sp.add_argument("--p", required=True, dest="p_spec", help="vertex count")
    sp.add_argument("--out", dest="out_path", help="write graph6 to this file")
    sp.add_argument("--audit", choices=("on", "off"), default="on",
                    help="post-construction audits (default on)")

    sp = sub.add_parser("check", help="test a graph6 file for pattern containment")
    common(sp, "pattern or comma-joined family, e.g. star:6,spider:7")
    sp.add_argument("--graph", required=True, dest="graph_path", help="graph6 file")

    sp = sub.add_parser("oracle", help="exhaustive search for the exact maximum")
    common(sp, "pattern or comma-joined family")
    sp.add_argument("--p", required=True, dest="p_spec", help="vertex count")
    sp.add_argument("--budget", help="time budget, e.g. 60s or 2m")
    sp.add_argument("--parallel", type=int, default=1, help="worker processes")
    sp.add_argument("--max-p", type=int, dest="max_p", help="override the search size cap")
    sp.add_argument("--out", dest="out_path", help="write the witness graph6 here")

    sp = sub.add_parser("verify", help="formula vs oracle vs witness sweep")
    common(sp)
    sp.add_argument("--p", required=True, dest="p_spec", help="p or range a..b")
    sp.add_argument("--json-out", dest="json_path", help="write the report as JSON")
    sp.add_argument("--budget", help="time budget per oracle run")
    sp.add_argument("--parallel", type=int, default=1)
    sp.add_argument("--max-p", type=int, dest="max_p")

    sp = sub.add_parser("table", help="closed-form table over a p range")
    common(sp)
    sp.add_argument("--p", dest="p_spec", help="p or range a..b")
    sp.add_argument("--p-max", type=int, dest="p_max", help="table from n up to this p")
    sp.add_argument("--format", dest="fmt", choices=("text", "csv"), default="text")

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    budget = None
    if getattr(ns, "budget", None):
        try:
            budget = _parse_budget(ns.budget)
        except ValueError:
            print(f"error: bad --budget value {ns.budget!r}", file=sys.stderr)
            return USAGE_ERROR
    request = CliRequest(
        subcommand=ns.subcommand,
        pattern=getattr(ns, "pattern", None),
        graph_path=getattr(ns, "graph_path", None),
        p_spec=getattr(ns, "p_spec", None),
        p_max=getattr(ns, "p_max", None) if ns.subcommand == "table" else None,
        out_path=getattr(ns, "out_path", None),
        json_path=getattr(ns, "json_path", None),
        fmt=getattr(ns, "fmt", "text"),
        as_json=getattr(ns, "as_json", False),
        audit=getattr(ns, "audit", "on") != "off",
        budget=budget,
        parallel=getattr(ns, "parallel", 1),
        max_p=getattr(ns, "max_p", None) if ns.subcommand in ("oracle", "verify") else None,
        plain=getattr(ns, "plain", False),
    )
    return run(request)


if __name__ == "__main__":
    raise SystemExit(main())
