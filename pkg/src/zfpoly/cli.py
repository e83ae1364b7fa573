"""Command-line front end.

Subcommands: ``poly`` (zero forcing polynomial of a graph), ``forts``
(fort listing and minimum cover), ``check`` (theorem/conjecture suites),
``eval`` (exact polynomial evaluation).  Output is JSON unless ``--pretty``
is given.  Exit codes: 0 success, 1 suite failure, 2 parse error, 3 size cap
exceeded, 4 method/graph mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import closed_forms, sweeps
from .forts import enumerate_forts, min_fort_cover
from .graphs import (
    Graph,
    GraphFormatError,
    SizeCapError,
    complete,
    complete_multipartite,
    cycle,
    cycle_plus_chord,
    empty,
    from_edge_list_text,
    from_graph6,
    path,
    star,
    threshold_from_string,
    vertices_of,
    wheel,
)
from .polynomial import ZfPolynomial, zf_polynomial, zf_polynomial_by_components

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_METHOD = 4


class MethodMismatchError(ValueError):
    """Requested method cannot handle the given graph."""


def _parse_family(spec: str) -> tuple[str, list[str]]:
    name, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    return name, args


def _family_graph(spec: str) -> Graph:
    name, args = _parse_family(spec)
    try:
        if name == "path":
            return path(int(args[0]))
        if name == "cycle":
            return cycle(int(args[0]))
        if name == "complete":
            return complete(int(args[0]))
        if name == "empty":
            return empty(int(args[0]))
        if name == "star":
            return star(int(args[0]))
        if name == "wheel":
            return wheel(int(args[0]))
        if name == "multipartite":
            return complete_multipartite([int(a) for a in args[0].split(",")])
        if name == "threshold":
            return threshold_from_string(args[0])
        if name == "cycle-chord":
            return cycle_plus_chord(int(args[0]), int(args[1]), int(args[2]))
    except IndexError as exc:
        raise GraphFormatError(f"family spec {spec!r} is missing arguments") from exc
    raise GraphFormatError(f"unknown family {name!r}")


def _load_graph(args: argparse.Namespace) -> Graph:
    sources = [s for s in (args.edge_list, args.graph6, args.family) if s is not None]
    if len(sources) != 1:
        raise GraphFormatError("give exactly one of --edge-list, --graph6, --family")
    if args.edge_list is not None:
        with open(args.edge_list, "r", encoding="ascii") as fh:
            return from_edge_list_text(fh.read())
    if args.graph6 is not None:
        text = args.graph6
        if os.path.exists(text):
            with open(text, "r", encoding="ascii") as fh:
                lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
            if not lines:
                raise GraphFormatError(f"no graph6 line in {text}")
            text = lines[0]
        return from_graph6(text)
    return _family_graph(args.family)


def _closed_form_poly(family_spec: str | None) -> ZfPolynomial:
    if family_spec is None:
        raise MethodMismatchError("--method closed requires a --family input")
    name, args = _parse_family(family_spec)
    if name == "path":
        return closed_forms.poly_path(int(args[0]))
    if name == "cycle":
        return closed_forms.poly_cycle(int(args[0]))
    if name == "complete":
        return closed_forms.poly_complete(int(args[0]))
    if name == "wheel":
        return closed_forms.poly_wheel(int(args[0]))
    if name == "multipartite":
        return closed_forms.poly_multipartite([int(a) for a in args[0].split(",")])
    if name == "threshold":
        return closed_forms.poly_threshold(args[0])
    raise MethodMismatchError(f"no closed form for family {name!r}")


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--edge-list", metavar="FILE", help="edge-list file: 'n m' header then 'u v' lines")
    parser.add_argument("--graph6", metavar="STR_OR_FILE", help="graph6 string, or a file containing one")
    parser.add_argument(
        "--family",
        metavar="NAME:ARGS",
        help="e.g. path:7, cycle:6, complete:5, wheel:6, multipartite:2,3, "
             "threshold:11011, cycle-chord:6:0:2",
    )


def _cmd_poly(args: argparse.Namespace) -> int:
    if args.method == "closed":
        poly = _closed_form_poly(args.family)
    else:
        g = _load_graph(args)
        if args.method == "components":
            poly = zf_polynomial_by_components(g)
        else:
            poly = zf_polynomial(g)
    if args.pretty:
        print(poly.pretty())
    else:
        print(poly.to_json())
    return EXIT_OK


def _cmd_forts(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    family = enumerate_forts(g)
    payload = family.to_json_dict()
    if args.min_cover:
        size, witness = min_fort_cover(g)
        payload["min_cover"] = {"size": size, "witness": vertices_of(witness)}
    print(json.dumps(payload))
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    try:
        at = Fraction(args.at)
    except (ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"--at expects an exact rational, got {args.at!r}") from exc
    print(zf_polynomial(g).evaluate(at))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    if args.suite not in sweeps.SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(sweeps.SUITES)}", file=sys.stderr)
        return EXIT_PARSE
    report = sweeps.run_suite(args.suite, max_n=args.max_n, seed=args.seed, jobs=args.jobs)
    for rec in report["failures"]:
        print(json.dumps({"record": "failure", **rec}))
    for rec in report["warnings"]:
        print(json.dumps({"record": "warning", **rec}))
    summary = {
        "record": "summary",
        "suite": report["suite"],
        "graphs_checked": report["graphs_checked"],
        "failures": len(report["failures"]),
        "warnings": len(report["warnings"]),
        "passed": report["passed"],
        "elapsed_s": report["elapsed_s"],
    }
    print(json.dumps(summary))
    return EXIT_OK if report["passed"] else EXIT_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zfpoly", description="Zero forcing polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="compute a zero forcing polynomial")
    _add_graph_source(p_poly)
    p_poly.add_argument("--method", choices=("brute", "closed", "components"), default="brute")
    p_poly.add_argument("--pretty", action="store_true", help="print 'a x^i + ...' instead of JSON")
    p_poly.set_defaults(func=_cmd_poly)

    p_forts = sub.add_parser("forts", help="list forts; optionally solve the minimum cover")
    _add_graph_source(p_forts)
    p_forts.add_argument("--min-cover", action="store_true", help="also solve the fort-cover program")
    p_forts.set_defaults(func=_cmd_forts)

    p_check = sub.add_parser("check", help="run a theorem/conjecture suite")
    p_check.add_argument("--suite", required=True, help=f"one of: {', '.join(sweeps.SUITES)}")
    p_check.add_argument("--max-n", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--jobs", type=int, default=1)
    p_check.set_defaults(func=_cmd_check)

    p_eval = sub.add_parser("eval", help="evaluate the polynomial at an exact rational")
    _add_graph_source(p_eval)
    p_eval.add_argument("--at", required=True, metavar="X", help="rational point, e.g. 1 or 3/2")
    p_eval.set_defaults(func=_cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except MethodMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD
    except (GraphFormatError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
