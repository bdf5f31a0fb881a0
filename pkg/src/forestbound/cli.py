"""Command-line interface.

Exit codes: 0 all checks passed, 1 verification failures, 2 usage or input
errors, 3 resource guard tripped, 4 a counterexample to an open conjecture
was found (a discovery, kept distinct from ordinary failure so automation
can tell them apart).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds
from .errors import GenerationError, PrecisionError, ResourceLimitError
from .exactreal import to_decimal_string
from .forests import (
    forest_count,
    forest_polynomial,
    pseudo_forest_polynomial,
    r_at_two_exact,
    r_polynomial,
    spanning_tree_count,
)
from .graphs import complete_graph, cycle_graph, glued_cycles, petersen, random_regular, two_lift
from .io import graph_from_json, graph_to_dict, signs_from_json
from .matching import matching_polynomial
from .polynomials import IntPolynomial
from .reporting import combined_exit_code
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suites


def _read_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(fh.read())


def _read_signs(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return signs_from_json(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _poly_payload(poly: IntPolynomial) -> str:
    return json.dumps(
        {
            "format": "polynomial-v1",
            "variable": "z",
            "coefficients": [str(c) for c in poly.coeffs],
        }
    )


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "complete":
        g = complete_graph(args.n)
    elif args.family == "cycle":
        g = cycle_graph(args.k)
    elif args.family == "glued":
        g = glued_cycles(args.k, args.r)
    elif args.family == "petersen":
        g = petersen()
    elif args.family == "random-regular":
        g = random_regular(args.d, args.n, args.seed, max_attempts=args.max_attempts)
    elif args.family == "lift":
        g = two_lift(_read_graph(args.base), _read_signs(args.signs))
    else:  # pragma: no cover - argparse enforces choices
        raise ValueError(f"unknown family {args.family}")
    _emit(json.dumps(graph_to_dict(g)), args.out)
    return 0


def cmd_poly(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.kind == "matching":
        poly = matching_polynomial(g)
    elif args.kind == "forest":
        poly = forest_polynomial(g).poly
    elif args.kind == "r":
        poly = r_polynomial(g)
    else:
        poly = pseudo_forest_polynomial(g)
    _emit(_poly_payload(poly), args.out)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    if args.kind == "forests":
        value = forest_count(g)
    elif args.kind == "trees":
        value = spanning_tree_count(g)
    else:  # r-at-2
        d = g.regular_degree()
        if d is None:
            raise ValueError("r-at-2 requires a regular graph")
        value = r_at_two_exact(g, d)
    _emit(str(value), args.out)
    return 0


def _row_payload(row: bounds.BoundRow, digits: int) -> dict:
    return {
        "d": row.d,
        "conjecture": to_decimal_string(row.conjecture.mid, digits),
        "matching_bound": to_decimal_string(row.matching_bound.mid, digits),
        "d_minus_half_inv": to_decimal_string(row.simple_bound, digits),
        "bound_integer": str(row.bound_integer),
    }


def cmd_constants(args: argparse.Namespace) -> int:
    rows = bounds.table1(args.d, args.d, digits=args.digits)
    _emit(json.dumps(_row_payload(rows[0], args.digits)), args.out)
    return 0


def cmd_table1(args: argparse.Namespace) -> int:
    rows = bounds.table1(args.d_min, args.d_max, digits=args.digits)
    if args.format == "csv":
        lines = ["d,conjecture,matching_bound,d_minus_half_inv"]
        for row in rows:
            payload = _row_payload(row, args.digits)
            lines.append(
                f"{payload['d']},{payload['conjecture']},{payload['matching_bound']},{payload['d_minus_half_inv']}"
            )
        _emit("\n".join(lines), args.out)
    else:
        _emit(
            json.dumps(
                {
                    "format": "table-v1",
                    "digits": args.digits,
                    "rows": [_row_payload(r, args.digits) for r in rows],
                }
            ),
            args.out,
        )
    return 0


def cmd_inequality(args: argparse.Namespace) -> int:
    report = bounds.verify_key_inequality(args.n_min, args.n_max)
    _emit(report.to_json(), args.out)
    print(report.summary_line(), file=sys.stderr)
    return report.exit_code


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, samples=args.samples, seed=args.seed, max_vertices=args.max_vertices)
    for report in reports:
        print(report.summary_line(), file=sys.stderr)
    payload = {
        "format": "verification-v1",
        "seed": args.seed,
        "suites": [r.to_dict() for r in reports],
        "summary": {
            "passed": sum(r.num_passed for r in reports),
            "failed": sum(r.num_failed for r in reports),
            "critical": sum(r.num_critical for r in reports),
        },
    }
    _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    return combined_exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forestbound",
        description="exact spanning-forest bounds toolkit: generators, polynomials, certified constants, verification suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph in graph-v1 JSON")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    p = gen_sub.add_parser("complete")
    p.add_argument("n", type=int)
    p = gen_sub.add_parser("cycle")
    p.add_argument("k", type=int)
    p = gen_sub.add_parser("glued")
    p.add_argument("k", type=int)
    p.add_argument("r", type=int)
    gen_sub.add_parser("petersen")
    p = gen_sub.add_parser("random-regular")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-attempts", type=int, default=10_000)
    p = gen_sub.add_parser("lift")
    p.add_argument("base")
    p.add_argument("signs")
    for sp in gen_sub.choices.values():
        sp.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    poly = sub.add_parser("poly", help="polynomial of a graph as decimal-string coefficients")
    poly.add_argument("kind", choices=["matching", "forest", "r", "pseudoforest"])
    poly.add_argument("graph")
    poly.add_argument("--out")
    poly.set_defaults(func=cmd_poly)

    count = sub.add_parser("count", help="exact integer counts")
    count.add_argument("kind", choices=["forests", "trees", "r-at-2"])
    count.add_argument("graph")
    count.add_argument("--out")
    count.set_defaults(func=cmd_count)

    consts = sub.add_parser("constants", help="one row of certified constants")
    consts.add_argument("--d", type=int, required=True)
    consts.add_argument("--digits", type=int, default=15)
    consts.add_argument("--out")
    consts.set_defaults(func=cmd_constants)

    table = sub.add_parser("table1", help="constants table as CSV or JSON")
    table.add_argument("--d-min", type=int, default=4)
    table.add_argument("--d-max", type=int, default=20)
    table.add_argument("--digits", type=int, default=15)
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--out")
    table.set_defaults(func=cmd_table1)

    ineq = sub.add_parser("inequality", help="exact integer inequality sweep")
    ineq.add_argument("--n-min", type=int, default=5)
    ineq.add_argument("--n-max", type=int, default=73)
    ineq.add_argument("--out")
    ineq.set_defaults(func=cmd_inequality)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=list(SUITE_NAMES) + ["all"])
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--max-vertices", type=int, default=None)
    ver.add_argument("--out")
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimitError, GenerationError, PrecisionError) as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
