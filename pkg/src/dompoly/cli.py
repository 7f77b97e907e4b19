"""Command-line interface.

    dompoly compute --family star --n 4
    dompoly verify --lemma step --family path --n 6
    dompoly check-theorem --theorem mode --n 8192 --h 1 --auto-params
    dompoly generate --all-labeled 4 | dompoly batch --assert-unimodal --universal-only
    dompoly sample --family star --n 100 --k 10 --samples 100000 --seed 7

Exit codes: 0 success, 1 failed assertion/identity/condition, 2 input
error, 3 capacity error. JSON output renders every integer as a decimal
string and every fraction as ``"p/q"``.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from typing import Any

from . import __version__, kernels
from .analysis import analyze, small_case_mode_window
from .engine import DEFAULT_LIMIT, CapacityError, domination_polynomial, e_tables
from .graph import Graph, GraphError, members, universal_vertex_count
from .graphio import (
    ConstructionError,
    ParseError,
    generate,
    iter_graph6,
    join_universal,
    parse_edgelist,
    parse_graph6,
    write_graph6,
)
from .sampling import compare_coefficients, estimate_rk
from .theorems import (
    dprime_identity_mask,
    check_concavity_condition,
    check_construction_bound,
    check_mode_condition,
    concavity_condition_params,
    concavity_range_ok,
    mode_condition_params,
    verify_concavity_bound,
    verify_e_recurrence,
    verify_step_identity,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

LEMMAS = {"2.2": "step", "step": "step", "e-rec": "e-rec", "dprime": "dprime",
          "2.4": "concavity", "concavity": "concavity"}
THEOREMS = {"1.4": "mode", "mode": "mode", "1.5": "concavity", "concavity": "concavity",
            "construction": "construction"}


class InputError(Exception):
    pass


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return obj
    if is_dataclass(obj):
        return jsonable(asdict(obj))
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(v) for v in sorted(obj)]
    return str(obj)


# --- input handling ------------------------------------------------------------------

def add_input_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input (default: first graph6 record on stdin)")
    src.add_argument("--g6", help="graph6 record")
    src.add_argument("--edgelist", metavar="PATH", help="edge-list file ('-' for stdin)")
    src.add_argument("--family", help="generator family: complete, path, cycle, star, empty, "
                                       "petersen, gnp, join_universal")
    src.add_argument("--n", type=int, help="family size")
    src.add_argument("--p", type=float, help="edge probability (gnp)")
    src.add_argument("--seed", type=int, default=0, help="seed (gnp, sample)")
    src.add_argument("--base", help="base family for join_universal")
    src.add_argument("--base-n", type=int, help="base size for join_universal")
    src.add_argument("--count", type=int, default=1, help="universal vertices to add (join_universal)")


def read_graph(args) -> tuple[Graph, dict]:
    if args.g6 is not None:
        return parse_graph6(args.g6), {"graph6": args.g6}
    if args.edgelist is not None:
        text = sys.stdin.read() if args.edgelist == "-" else open(args.edgelist).read()
        return parse_edgelist(text), {"edgelist": args.edgelist}
    if args.family is not None:
        params: dict[str, Any] = {}
        if args.family == "join_universal":
            if args.base is None:
                raise InputError("join_universal needs --base")
            params["base"] = args.base
            if args.base_n is not None:
                params["base_n"] = args.base_n
            params["count"] = args.count
        elif args.family != "petersen":
            if args.n is None:
                raise InputError(f"family {args.family!r} needs --n")
            params["n"] = args.n
            if args.family == "gnp":
                if args.p is None:
                    raise InputError("gnp needs --p")
                params["p"] = args.p
                params["seed"] = args.seed
        g = generate(args.family, **params)
        desc = {"family": args.family}
        desc.update({k: v for k, v in params.items()})
        return g, desc
    for lineno, rec, item in iter_graph6(sys.stdin):
        if isinstance(item, ParseError):
            raise item
        return item, {"graph6": rec, "stdin_line": lineno}
    raise InputError("no graph given (use --g6, --edgelist, --family or stdin)")


def emit(args, command: str, inp: dict, params: dict, results: dict, t0: float) -> None:
    report = {
        "command": command,
        "input": inp,
        "parameters": params,
        "results": results,
        "engine_version": __version__,
        "backend": kernels.BACKEND,
        "timings": {"wall_ms": round((time.perf_counter() - t0) * 1000, 3)},
    }
    if args.format == "json":
        print(json.dumps(jsonable(report), indent=2 if args.pretty else None))
    else:
        for key, val in jsonable(results).items():
            print(f"{key}: {val if isinstance(val, str) else json.dumps(val)}")


def analysis_dict(coeffs) -> dict:
    rep = analyze(coeffs)
    return {
        "unimodal": rep.unimodal,
        "mode": rep.mode,
        "first_violation": rep.first_violation,
        "concavity_window": rep.concavity_window,
        "ratio_monotone": rep.ratio_monotone,
    }


# --- commands ---------------------------------------------------------------------------

def cmd_compute(args) -> int:
    t0 = time.perf_counter()
    g, inp = read_graph(args)
    coeffs = domination_polynomial(g, limit=args.limit, workers=args.workers)
    if args.csv:
        print("k,d_k")
        for k, d in enumerate(coeffs):
            print(f"{k},{d}")
        return EXIT_OK
    results = {"n": g.n, "universal_vertices": universal_vertex_count(g), "coeffs": coeffs}
    results.update(analysis_dict(coeffs))
    emit(args, "compute", inp, {"limit": args.limit}, results, t0)
    return EXIT_OK


def _verify_records(g: Graph, which: str, limit: int) -> list[dict]:
    n = g.n
    records = []
    if which == "dprime":
        for s in range(1, 1 << n):
            r = dprime_identity_mask(g, s)
            records.append({"S": sorted(members(s)), "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds})
        return records
    tables = e_tables(g, limit=limit)
    coeffs = domination_polynomial(g, limit=limit)
    if which == "step":
        for k in range(n):
            r = verify_step_identity(g, k, coeffs=coeffs, tables=tables)
            records.append({"k": k, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds})
    elif which == "e-rec":
        for k in range(n):
            for r in verify_e_recurrence(g, k, tables=tables, limit=limit):
                records.append({"k": k, "T": sorted(members(r.params["T"])),
                                "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds})
    else:
        for k in range(n - 1):
            if concavity_range_ok(n, k):
                r = verify_concavity_bound(g, k, coeffs=coeffs, tables=tables)
                records.append({"k": k, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds})
    return records


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    which = LEMMAS[args.lemma]
    g, inp = read_graph(args)
    limit = min(args.limit, 16)
    if g.n > limit:
        raise CapacityError(f"n={g.n} exceeds the verification limit {limit}")
    records = _verify_records(g, which, limit)
    failed = [r for r in records if not r["holds"]]
    for r in failed:
        print(f"identity failed: {jsonable(r)}", file=sys.stderr)
    results = {"n": g.n, "checks": records, "passed": len(records) - len(failed), "failed": len(failed)}
    emit(args, "verify", inp, {"lemma": args.lemma}, results, t0)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_check_theorem(args) -> int:
    t0 = time.perf_counter()
    which = THEOREMS[args.theorem]
    if args.n is None:
        raise InputError("--n is required")
    n = args.n
    params: dict[str, Any] = {"theorem": args.theorem, "n": n}
    if which == "construction":
        rep = check_construction_bound(n)
        if not rep.in_theorem_range:
            print(f"note: n={n} is below 2^20; links reported for exploration only", file=sys.stderr)
        results = {
            "holds": rep.holds,
            "d": rep.d,
            "ks": rep.ks,
            "in_theorem_range": rep.in_theorem_range,
            "applicable": rep.applicable,
            "links": [
                {"name": l.name, "k": l.k, "relation": ">" if l.strict else ">=",
                 "lhs": l.lhs, "rhs": l.rhs, "lhs_approx": float(l.lhs), "rhs_approx": float(l.rhs),
                 "holds": l.holds}
                for l in rep.links
            ],
        }
        for l in rep.failing():
            print(f"link failed: {l.name} (k={l.k}): {float(l.lhs):.6g} vs {float(l.rhs):.6g}", file=sys.stderr)
        emit(args, "check-theorem", {}, params, results, t0)
        return EXIT_OK if rep.holds else EXIT_FAIL

    if args.h is None:
        raise InputError("--h is required")
    k, alpha, dk, dk_ratio = args.k, args.alpha, args.dk_lower, None
    if args.auto_params:
        auto = (mode_condition_params if which == "mode" else concavity_condition_params)(n)
        if args.h < 1:
            raise InputError("--auto-params needs h >= 1 (the lower bound C(n-1, k-1) uses a universal vertex)")
        k, alpha, dk_ratio = auto["k"], auto["alpha"], auto["dk_lower_ratio"]
        dk = None
    if k is None or alpha is None or (dk is None and dk_ratio is None):
        raise InputError("give --k, --alpha and --dk-lower, or --auto-params")
    check = check_mode_condition if which == "mode" else check_concavity_condition
    v = check(n, args.h, k, alpha, dk, dk_lower_ratio=dk_ratio)
    params.update({"h": args.h, "k": k, "alpha": alpha,
                   "dk_lower": dk if dk is not None else "C(n-1,k-1)"})
    results = {"holds": v.holds, "scale": "C(n,k)", "lhs": v.lhs, "rhs": v.rhs,
               "lhs_approx": float(v.lhs), "rhs_approx": float(v.rhs)}
    emit(args, "check-theorem", {}, params, results, t0)
    return EXIT_OK if v.holds else EXIT_FAIL


def _batch_one(item, args):
    lineno, rec, g = item
    if isinstance(g, ParseError):
        return {"line": lineno, "graph6": rec, "status": "parse-error", "error": str(g)}
    h = universal_vertex_count(g)
    if args.universal_only and h == 0:
        return {"line": lineno, "graph6": rec, "n": g.n, "status": "skipped"}
    try:
        coeffs = domination_polynomial(g, limit=args.limit)
    except CapacityError as exc:
        return {"line": lineno, "graph6": rec, "status": "capacity-error", "error": str(exc)}
    rep = analyze(coeffs)
    problems = []
    if args.assert_unimodal and not rep.unimodal:
        problems.append("not unimodal")
    if args.assert_mode_window and rep.mode not in small_case_mode_window(g.n):
        problems.append(f"mode {rep.mode} outside {list(small_case_mode_window(g.n))}")
    return {"line": lineno, "graph6": rec, "n": g.n, "universal_vertices": h, "coeffs": coeffs,
            "unimodal": rep.unimodal, "mode": rep.mode,
            "status": "fail" if problems else "ok", "problems": problems}


def cmd_batch(args) -> int:
    t0 = time.perf_counter()
    stream = iter_graph6(sys.stdin)
    records, counts = [], {"total": 0, "ok": 0, "fail": 0, "skipped": 0, "parse-error": 0, "capacity-error": 0}
    stopped = False
    workers = args.workers or 1
    pool = ThreadPoolExecutor(workers) if workers > 1 else None
    try:
        while not stopped:
            block = list(itertools.islice(stream, 256))
            if not block:
                break
            done = pool.map(lambda it: _batch_one(it, args), block) if pool else (_batch_one(it, args) for it in block)
            for r in done:
                counts["total"] += 1
                counts[r["status"]] += 1
                if r["status"] == "fail":
                    print(f"assertion failed (line {r['line']}): {r['graph6']} {'; '.join(r['problems'])}",
                          file=sys.stderr)
                elif r["status"] in ("parse-error", "capacity-error"):
                    print(f"{r['status']}: {r['error']}", file=sys.stderr)
                    if not args.keep_going:
                        stopped = True
                if not args.summary_only:
                    records.append(r)
                if stopped:
                    break
    finally:
        if pool:
            pool.shutdown()
    results = {"summary": counts}
    if not args.summary_only:
        results["graphs"] = records
    params = {"assert_unimodal": args.assert_unimodal, "assert_mode_window": args.assert_mode_window,
              "universal_only": args.universal_only, "keep_going": args.keep_going}
    emit(args, "batch", {"stdin": True}, params, results, t0)
    if counts["fail"]:
        return EXIT_FAIL
    if counts["capacity-error"] and not counts["parse-error"]:
        return EXIT_CAPACITY
    if counts["parse-error"] or counts["capacity-error"]:
        return EXIT_INPUT
    return EXIT_OK


def cmd_sample(args) -> int:
    t0 = time.perf_counter()
    if args.k is None or args.k < 1:
        raise InputError("--k must be a positive integer")
    if args.samples < 1:
        raise InputError("--samples must be positive")
    g, inp = read_graph(args)
    if args.k > g.n:
        raise InputError(f"--k {args.k} exceeds n={g.n}")
    params = {"k": args.k, "samples": args.samples, "seed": args.seed, "level": args.level}
    if args.compare:
        verdict = compare_coefficients(g, args.k, args.samples, args.seed, args.level)
        emit(args, "sample", inp, params, {"n": g.n, "d_k_vs_d_k_plus_1": verdict}, t0)
        return EXIT_OK
    est = estimate_rk(g, args.k, args.samples, args.seed, args.level)
    results = {"n": g.n, "k": est.k, "samples": est.samples, "hits": est.hits, "point": est.point,
               "point_approx": float(est.point), "ci_low": est.ci_low, "ci_high": est.ci_high,
               "level": est.level, "seed": est.seed}
    emit(args, "sample", inp, params, results, t0)
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.all_labeled is not None:
        n = args.all_labeled
        if not 0 <= n <= 8:
            raise InputError("--all-labeled supports 0 <= n <= 8")
        pairs = [(u, v) for v in range(n) for u in range(v)]
        for bits in range(1 << len(pairs)):
            g = Graph(n, [e for i, e in enumerate(pairs) if bits >> i & 1])
            if args.join_universal:
                g = join_universal(g, 1)
            print(write_graph6(g))
        return EXIT_OK
    g, _ = read_graph(args)
    if args.join_universal:
        g = join_universal(g, 1)
    print(write_graph6(g))
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dompoly", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, workers=True):
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--pretty", action="store_true", help="indent JSON")
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="enumeration limit on n (max 64)")
        if workers:
            p.add_argument("--workers", type=int, default=None, help="parallel workers (default: all CPUs)")

    p = sub.add_parser("compute", help="exact domination polynomial and its shape")
    add_input_args(p)
    common(p)
    p.add_argument("--csv", action="store_true", help="emit k,d_k rows instead of JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a counting identity exhaustively on one graph")
    add_input_args(p)
    common(p, workers=False)
    p.add_argument("--lemma", required=True, choices=sorted(LEMMAS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check-theorem", help="evaluate a coefficient condition exactly")
    common(p, workers=False)
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--n", type=int)
    p.add_argument("--h", type=int, help="number of universal vertices")
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--dk-lower", type=int, help="certified lower bound on d_k")
    p.add_argument("--auto-params", action="store_true",
                   help="derive k, alpha and the bound C(n-1, k-1) from n")
    p.set_defaults(func=cmd_check_theorem)

    p = sub.add_parser("batch", help="process a newline-delimited graph6 stream from stdin")
    common(p)
    p.add_argument("--assert-unimodal", action="store_true")
    p.add_argument("--assert-mode-window", action="store_true",
                   help="require mode in {floor(n/2), floor((n+1)/2)}")
    p.add_argument("--universal-only", action="store_true",
                   help="skip graphs without a universal vertex")
    p.add_argument("--keep-going", action="store_true", help="continue past malformed records")
    p.add_argument("--summary-only", action="store_true", help="omit per-graph records")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("sample", help="Monte-Carlo estimate of d_k / C(n, k)")
    add_input_args(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--k", type=int)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--level", type=float, default=0.95)
    p.add_argument("--compare", action="store_true", help="compare d_k with d_{k+1} instead")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("generate", help="write graph6 records")
    add_input_args(p)
    p.add_argument("--all-labeled", type=int, metavar="N", help="every labeled graph on N vertices")
    p.add_argument("--join-universal", action="store_true", help="append one universal vertex")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, GraphError, ConstructionError, InputError, ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
