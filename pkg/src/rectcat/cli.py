"""Command-line interface: counting, enumeration, decomposition, verification.

Every command is deterministic (identical inputs give byte-identical
stdout).  Exit codes: 0 success, 2 usage or domain error, 3 verification
failure or internal cross-check mismatch.  --json swaps the text output for
a single versioned JSON object; counts travel as decimal strings there, so
no reader has to round-trip big integers through floats.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from math import gcd

from . import bizley, christoffel, comparison, decomposition, diagrams, formulas, verify

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
DEFAULT_CHECK_BOUND = 400

METHODS = ["oracle", "bizley", "coprime", "fuss", "theorem", "decompose", "auto"]


def _fit_theorem(a: int, b: int):
    """(route, k, n) when b = a(n+1) - 2 or b = an + 2 with a = 2k, else None."""
    if a < 2 or a % 2:
        return None
    k = a // 2
    if (b + 2) % a == 0 and (b + 2) // a >= 1:
        return "theorem1", k, (b + 2) // a - 1
    if (b - 2) % a == 0 and (b - 2) // a >= 1:
        return "theorem2", k, (b - 2) // a
    return None


def _count_by(method: str, a: int, b: int) -> tuple[int, str]:
    if method == "oracle":
        return diagrams.count_rect(a, b), "oracle"
    if method == "bizley":
        return bizley.bizley_count(a, b), "bizley"
    if method == "coprime":
        return formulas.coprime_catalan(a, b), "coprime"
    if method == "fuss":
        if b % a:
            raise ValueError(
                f"fuss needs the width to be a multiple of the height, got {a}x{b}"
            )
        return formulas.fuss_catalan(a, b // a), "fuss"
    if method == "theorem":
        fit = _fit_theorem(a, b)
        if fit is None:
            raise ValueError(
                f"{a}x{b} fits neither theorem family b = a(n+1)-2 nor b = an+2"
            )
        route, k, n = fit
        if route == "theorem1":
            return comparison.theorem1_count(k, n), "theorem"
        return comparison.theorem2_count(k, n), "theorem"
    if method == "decompose":
        mu = diagrams.christoffel_diagram(a, b)
        return decomposition.h_value(decomposition.decompose(mu)), "decompose"
    # auto: cheapest applicable closed form, the partition sum as fallback
    if gcd(a, b) == 1:
        return formulas.coprime_catalan(a, b), "coprime"
    if b % a == 0:
        return formulas.fuss_catalan(a, b // a), "fuss"
    fit = _fit_theorem(a, b)
    if fit is not None:
        route, k, n = fit
        value = (
            comparison.theorem1_count(k, n)
            if route == "theorem1"
            else comparison.theorem2_count(k, n)
        )
        return value, "theorem"
    return bizley.bizley_count(a, b), "bizley"


def _append_cache(path: str, a: int, b: int, method: str, count: int, micros: int) -> None:
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as fh:
        writer = csv.writer(fh)
        if fresh:
            writer.writerow(["a", "b", "method", "count", "micros"])
        writer.writerow([a, b, method, str(count), micros])


def _cmd_count(args):
    a, b = args.a, args.b
    diagrams.check_rect(a, b)
    start = time.perf_counter()
    value, resolved = _count_by(args.method, a, b)
    micros = int((time.perf_counter() - start) * 1e6)
    failures = []
    oracle = None
    if args.method == "auto" and a * b <= args.check_bound:
        oracle = diagrams.count_rect(a, b)
        if oracle != value:
            failures.append(
                f"method {resolved} gives {value} for {a}x{b}, oracle {oracle}"
            )
    if args.cache:
        _append_cache(args.cache, a, b, resolved, value, micros)
    lines = [str(value)] + [f"FAIL: {f}" for f in failures]
    results = {
        "a": a,
        "b": b,
        "method": args.method,
        "resolved_method": resolved,
        "count": str(value),
        "oracle": None if oracle is None else str(oracle),
    }
    return lines, results, failures


def _cmd_christoffel(args):
    a, b = args.a, args.b
    mu = diagrams.christoffel_diagram(a, b)
    q = christoffel.q_boxes(a, b)
    profile = [christoffel.delta(a, b, l) for l in range(1, a)]
    lines = [
        f"rows: {diagrams.format_diagram(mu)}",
        f"q: {q}",
        f"delta: {','.join(str(d) for d in profile)}",
    ]
    results = {"a": a, "b": b, "rows": list(mu), "q": q, "delta": profile}
    return lines, results, []


def _cmd_decompose(args):
    if args.diagram is not None:
        if args.a is not None or args.b is not None:
            raise ValueError("give either a and b or --diagram, not both")
        mu = diagrams.parse_diagram(args.diagram)
    else:
        if args.a is None or args.b is None:
            raise ValueError("give both rectangle sides, or --diagram")
        mu = diagrams.christoffel_diagram(args.a, args.b)
    expr = decomposition.decompose(mu)
    value = decomposition.h_value(expr)
    oracle = diagrams.count_paths(mu)
    summands, leaves, depth = decomposition.expr_stats(expr)
    rendered = decomposition.render(expr, args.format)
    failures = []
    if value != oracle:
        failures.append(f"decomposition values to {value}, oracle {oracle}")
    lines = [
        f"expr: {rendered}",
        f"value: {value}",
        f"oracle: {oracle}",
        f"summands: {summands}",
        f"leaves: {leaves}",
        f"depth: {depth}",
    ] + [f"FAIL: {f}" for f in failures]
    results = {
        "diagram": list(mu),
        "expr": json.loads(decomposition.render(expr, "json")),
        "text": decomposition.render(expr, "text"),
        "value": str(value),
        "oracle": str(oracle),
        "summands": summands,
        "leaves": leaves,
        "depth": depth,
    }
    return lines, results, failures


def _cmd_enumerate(args):
    words = diagrams.enumerate_paths(args.a, args.b, cap=args.limit)
    lines = []
    items = []
    for word in words:
        mu = diagrams.word_to_diagram(args.a, args.b, word)
        lines.append(f"{word} {diagrams.format_diagram(mu)}".rstrip())
        items.append({"word": word, "diagram": list(mu)})
    results = {"a": args.a, "b": args.b, "count": len(words), "paths": items}
    return lines, results, []


def _report_checks(checks):
    width = max(len(c.name) for c in checks)
    lines = [
        f"{c.name:<{width}}  cells={c.cells:<7d} {'ok' if c.passed else 'FAIL'}"
        for c in checks
    ]
    failures = [f for c in checks for f in c.failures]
    if failures:
        lines.append("counterexamples:")
        lines.extend(f"  {f}" for f in failures[:10])
        if len(failures) > 10:
            lines.append(f"  ... and {len(failures) - 10} more")
    total = sum(c.cells for c in checks)
    verdict = "PASS" if not failures else "FAIL"
    lines.append(f"RESULT: {verdict} ({len(checks)} checks, {total} cells)")
    results = {
        "checks": [
            {"name": c.name, "cells": c.cells, "failures": c.failures[:10]}
            for c in checks
        ],
        "total_cells": total,
    }
    return lines, results, failures


def _cmd_verify(args):
    if args.families:
        fam_k, fam_n = args.families
    else:
        fam_k, fam_n = min(4, max(1, args.max_a // 2)), 3
    return _report_checks(verify.run_verify(args.max_a, args.max_b, fam_k, fam_n))


def _cmd_identities(args):
    return _report_checks(verify.run_identity_checks(args.max_a, args.max_b))


def _cmd_expand(args):
    a, b = args.a, args.b
    diagrams.check_rect(a, b)
    fit = _fit_theorem(a, b)
    if fit is None:
        raise ValueError(
            f"{a}x{b} fits neither family b = a(n+1)-2 nor b = an+2"
        )
    route, _, n = fit
    family = "upper" if route == "theorem1" else "lower"
    terms = comparison.rule2_terms(a, family, n)
    lines = [f"family: {family} (a={a}, b={b}, n={n})"]
    total = 0
    items = []
    for left, right in terms:
        lc = diagrams.count_rect(*left)
        rc = diagrams.count_rect(*right)
        total += lc * rc
        lines.append(
            f"{left[0]}x{left[1]} * {right[0]}x{right[1]}: {lc} * {rc} = {lc * rc}"
        )
        items.append(
            {
                "left": list(left),
                "right": list(right),
                "left_count": str(lc),
                "right_count": str(rc),
            }
        )
    if family == "upper":
        diff = diagrams.count_rect(a, b + 1) - diagrams.count_rect(a, b)
        step = f"count({a},{b + 1}) - count({a},{b})"
    else:
        diff = diagrams.count_rect(a, b) - diagrams.count_rect(a, b - 1)
        step = f"count({a},{b}) - count({a},{b - 1})"
    failures = []
    if total != diff:
        failures.append(f"term sum {total} differs from width step {diff}")
    lines.append(f"sum: {total}")
    lines.append(f"width step {step} = {diff}")
    lines.append("RESULT: " + ("PASS" if not failures else "FAIL"))
    results = {
        "a": a,
        "b": b,
        "family": family,
        "n": n,
        "terms": items,
        "sum": str(total),
        "difference": str(diff),
    }
    return lines, results, failures


FORMULAS = {
    "binomial": (2, formulas.binomial),
    "catalan": (1, formulas.catalan),
    "fuss": (2, formulas.fuss_catalan),
    "coprime": (2, formulas.coprime_catalan),
    "prime": (2, formulas.prime_rect),
    "ballot": (3, formulas.ballot_value),
    "ballot-brute": (3, formulas.ballot_brute),
    "avoidance": (2, formulas.avoidance_value),
}


def _cmd_formula(args):
    arity, fn = FORMULAS[args.name]
    if len(args.values) != arity:
        raise ValueError(f"{args.name} takes {arity} integers, got {len(args.values)}")
    value = fn(*args.values)
    results = {"name": args.name, "values": args.values, "result": str(value)}
    return [str(value)], results, []


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rectcat",
        description="Count, enumerate, and decompose Dyck paths in rectangles.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit one JSON object instead of text"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count the paths of a rectangle")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument(
        "--check-bound",
        type=int,
        default=DEFAULT_CHECK_BOUND,
        help="cross-check auto against the oracle while a*b is at most this",
    )
    p.add_argument(
        "--cache", metavar="FILE", help="append a,b,method,count,micros to this CSV"
    )
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser(
        "christoffel",
        parents=[common],
        help="maximal staircase rows, box count, and growth profile",
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_christoffel)

    p = sub.add_parser(
        "decompose", parents=[common], help="isosceles expression of a staircase"
    )
    p.add_argument("a", type=int, nargs="?")
    p.add_argument("b", type=int, nargs="?")
    p.add_argument("--diagram", help='explicit rows, e.g. "4,3,1"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "enumerate", parents=[common], help="list every path word with its diagram"
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument(
        "--limit",
        type=int,
        help="refuse when the count exceeds this (default 10**6, or RECTCAT_MAX_ENUM)",
    )
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run every cross-method sweep")
    p.add_argument("--max-a", type=int, default=8)
    p.add_argument("--max-b", type=int, default=10)
    p.add_argument(
        "--families",
        type=int,
        nargs=2,
        metavar=("K", "N"),
        help="theorem family ranges k <= K, n <= N (default: derived from --max-a)",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "identities",
        parents=[common],
        help="box-count and row-profile identity sweeps",
    )
    p.add_argument("--max-a", type=int, default=16)
    p.add_argument("--max-b", type=int, default=40)
    p.set_defaults(handler=_cmd_identities)

    p = sub.add_parser(
        "expand",
        parents=[common],
        help="telescoping term list of a family rectangle, with counts",
    )
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser(
        "formula", parents=[common], help="evaluate one closed-form expression"
    )
    p.add_argument("name", choices=sorted(FORMULAS))
    p.add_argument("values", type=int, nargs="+")
    p.set_defaults(handler=_cmd_formula)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        lines, results, failures = args.handler(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return EXIT_MISMATCH
    if args.json:
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "results": results,
            "failures": failures,
        }
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return EXIT_MISMATCH if failures else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
