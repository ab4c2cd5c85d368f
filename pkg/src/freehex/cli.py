"""Command-line front end.

Four subcommands: count (exact tiling counts by any route), correlation
(quadrature evaluation of the gap-boundary correlation), table (CSV
sweeps over k), verify (self-check suites).  stdout carries data, stderr
carries diagnostics.  Exit codes: 0 ok, 2 usage error, 3 verification or
route disagreement, 4 quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import analysis, counting, oracle, region, verify
from .errors import FreehexError, NoConvergence


def _csv_value(v: object) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _emit_record(record: Dict[str, object], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
    else:
        print(",".join(record.keys()))
        print(",".join(_csv_value(v) for v in record.values()))


def _emit_rows(header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join(_csv_value(v) for v in row))


def _parse_krange(text: str) -> List[int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"malformed range {text!r}, expected a:b:step or a:b:2x")
    a, b = int(parts[0]), int(parts[1])
    if parts[2] == "2x":
        if a < 1:
            raise ValueError("geometric range needs a positive start")
        ks = []
        k = a
        while k <= b:
            ks.append(k)
            k *= 2
        return ks
    step = int(parts[2])
    if step < 1:
        raise ValueError("range step must be positive")
    return list(range(a, b + 1, step))


def _oracle_count(n: int, x: int, k: Optional[int], hole: str) -> int:
    if hole == "triangle":
        spec = region.RegionSpec(n, x, region.Triangle2(k))
    elif hole == "lozenge":
        spec = region.RegionSpec(n, x, region.HorizontalLozenge(k))
    else:
        spec = region.RegionSpec(n, x)
    return oracle.count_matchings(region.build_region(spec))


def cmd_count(args: argparse.Namespace) -> int:
    hole = args.hole
    k = args.k
    if hole != "none" and k is None:
        print("error: --k is required unless --hole none", file=sys.stderr)
        return 2
    if hole == "lozenge" and args.method == "pfaffian":
        print("error: no matrix route for the lozenge gap", file=sys.stderr)
        return 2

    methods = ["closed", "pfaffian", "oracle"] if args.method == "all" else [args.method]
    if hole == "lozenge" and args.method == "all":
        methods.remove("pfaffian")

    record: Dict[str, object] = {"command": "count", "n": args.n, "x": args.x}
    if hole != "none":
        record["k"] = k
    record["hole"] = hole
    record["method"] = args.method

    values = []
    for method in methods:
        if method == "closed":
            if hole == "triangle":
                v = counting.count_gap_closed(args.n, k, args.x)
            elif hole == "lozenge":
                v = counting.count_lozenge_closed(args.n, k, args.x)
            else:
                v = counting.macmahon(args.n, args.x)
        elif method == "pfaffian":
            if hole == "triangle":
                v = counting.count_gap_pfaffian(args.n, k, args.x)
            else:
                v = counting.count_free_pfaffian(args.n, args.x)
        else:
            v = _oracle_count(args.n, args.x, k, hole)
        record[f"count_{method}"] = str(v)
        values.append(v)

    agree = len(set(values)) == 1
    if args.method == "all":
        record["agree"] = agree
    _emit_record(record, args.format)
    return 0 if agree else 3


def cmd_correlation(args: argparse.Namespace) -> int:
    q = analysis.QuadratureSpec(
        tol=args.tol,
        max_panels=args.max_panels,
    )
    cv = analysis.omega_f(args.k, args.xi, q)
    asym = analysis.omega_asymptotic(args.k, args.xi) if args.k >= 1 else None
    record: Dict[str, object] = {
        "command": "correlation",
        "k": args.k,
        "xi": args.xi,
        "value": cv.value,
        "log_value": cv.log_value,
        "err": cv.err_estimate,
        "asymptotic": asym,
    }
    _emit_record(record, args.format)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    ks = _parse_krange(args.k_range)
    q = analysis.QuadratureSpec(tol=args.tol, max_panels=args.max_panels)
    if args.quantity == "omega":
        rows = []
        for k in ks:
            cv = analysis.omega_f(k, args.xi, q)
            rows.append([k, args.xi, cv.value, cv.log_value, cv.err_estimate])
        _emit_rows(["k", "xi", "value", "log_value", "err"], rows)
    elif args.quantity == "theorem1":
        rows = []
        for k in ks:
            v = analysis.distance_law_check(k, q)
            rows.append([k, v, abs(v - 1.0)])
        _emit_rows(["k", "value", "deviation"], rows)
    elif args.quantity == "theorem2":
        rows = []
        for k in ks:
            v = analysis.decay_ratio_check(k, q)
            rows.append([k, v, abs(v + 1.0)])
        _emit_rows(["k", "value", "deviation"], rows)
    else:
        if args.n is None:
            print("error: --quantity finite-ratio requires --n", file=sys.stderr)
            return 2
        n = args.n
        x = args.x if args.x is not None else n
        hole = region.Triangle2 if args.hole != "lozenge" else region.HorizontalLozenge
        rows = []
        for k in ks:
            r = counting.finite_ratio(n, k, x, hole)
            rows.append([k, n, x, r, float(r)])
        _emit_rows(["k", "n", "x", "ratio", "value"], rows)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run(args.suite, seed=args.seed, max_n=args.max_n)
    for r in results:
        mark = "ok  " if r.ok else "FAIL"
        print(f"{mark} {r.suite}/{r.name} ({r.cases} cases)")
    passed = sum(1 for r in results if r.ok)
    print(f"passed {passed}/{len(results)} checks")
    return 0 if passed == len(results) else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freehex",
        description="Exact tiling counts and gap-boundary correlations "
        "for half-hexagons with a free vertical side.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count", help="exact tiling count by one or all routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--hole", choices=("triangle", "lozenge", "none"), default="triangle")
    p.add_argument("--method", choices=("closed", "pfaffian", "oracle", "all"), default="all")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("correlation", help="gap-boundary correlation by quadrature")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--tol", type=float, default=analysis.DEFAULT_QUADRATURE.tol)
    p.add_argument("--max-panels", type=int, default=analysis.DEFAULT_QUADRATURE.max_panels)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_correlation)

    p = sub.add_parser("table", help="CSV sweep over a k range")
    p.add_argument(
        "--quantity",
        choices=("omega", "theorem1", "theorem2", "finite-ratio"),
        required=True,
    )
    p.add_argument("--k-range", required=True, metavar="a:b:step")
    p.add_argument("--xi", type=float, default=1.0)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--hole", choices=("triangle", "lozenge"), default="triangle")
    p.add_argument("--tol", type=float, default=analysis.DEFAULT_QUADRATURE.tol)
    p.add_argument("--max-panels", type=int, default=analysis.DEFAULT_QUADRATURE.max_panels)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument("--suite", choices=verify.SUITE_NAMES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    # Exact counts can run to hundreds of thousands of digits and the
    # output contract wants full decimal strings.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(10_000_000)
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (FreehexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
