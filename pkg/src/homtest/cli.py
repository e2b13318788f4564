"""Command-line entry point: ``homtest <command> [options] [input]``.

Exit codes: 0 success, 1 selftest failure, 2 input error, 3 resource cap,
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .bound import DEFAULT_MAX_CHECK_DIM, InvariantViolation, run_suite
from .graph import (Graph, GraphFormatError, chromatic_number_exact, fold_reduce, get_test_graph,
                    greedy_upper_bound, parse_dimacs, parse_edge_list, to_dimacs, to_edge_list)
from .homcomplex import (DEFAULT_CELL_CAP, ComplexIntegrityError, ResourceCapExceeded, boundary_complex,
                         build_hom, export_cells)
from .z2algebra import ChainComplexError, betti

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


def read_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)


def parse_tests(spec: str):
    names = [s for s in spec.split(",") if s.strip()]
    if not names:
        raise GraphFormatError("--tests needs at least one test graph name")
    try:
        return [get_test_graph(s) for s in names]
    except KeyError as exc:
        raise GraphFormatError(exc.args[0]) from None


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def cmd_bound(args) -> int:
    g = read_graph(args.input, args.format)
    tests = parse_tests(args.tests)
    report = run_suite(g, tests, args.max_dim, with_exact=args.exact, fold=not args.no_fold,
                       cell_cap=args.cell_cap)
    data = report.to_dict()
    lines = [f"graph: n={report.n} m={report.m} folded_n={report.folded_n}",
             f"trivial bound: {report.trivial_bound}"]
    for c in report.claims:
        if c.error:
            lines.append(f"  {c.test_name}: FAILED ({c.error})")
        elif c.empty:
            lines.append(f"  {c.test_name}: Hom complex empty, bound {c.lower_bound} (trivial)")
        else:
            note = " (truncation-limited)" if c.truncation_limited else ""
            if c.cap_limited:
                note += " (cell cap reached)"
            shown = list(c.evidence.values) if c.evidence is not None else []
            lines.append(f"  {c.test_name}: d={c.d} bound={c.lower_bound} reduced betti={shown} "
                         f"f-vector={c.f_vector}{note}")
    if report.exact_chi is not None:
        lines.append(f"exact chi: {report.exact_chi}")
    lines.append(f"best bound: {report.best_bound}")
    _emit(args, data, lines)
    return EXIT_CAP if report.failed or report.cap_limited else EXIT_OK


def cmd_betti(args) -> int:
    g = read_graph(args.input, args.format)
    if not args.no_fold:
        g = fold_reduce(g)[0]
    results, lines = [], []
    max_dim = "all" if args.max_dim is None else args.max_dim + 1
    for t in parse_tests(args.tests):
        h = build_hom(t, g, max_dim, args.cell_cap)
        bv = betti(boundary_complex(h), reduced=True)
        results.append({"name": t.name, "f_vector": h.f_vector, "empty": bv.empty,
                        "reduced_betti": list(bv.values), "complete_through": bv.complete_through})
        shown = "empty" if bv.empty else list(bv.values)
        lines.append(f"{t.name}: f-vector={h.f_vector} reduced betti={shown}")
    _emit(args, {"tests": results}, lines)
    return EXIT_OK


def cmd_hom_stats(args) -> int:
    g = read_graph(args.input, args.format)
    results, lines = [], []
    for t in parse_tests(args.tests):
        h = build_hom(t, g, "all" if args.max_dim is None else args.max_dim, args.cell_cap)
        results.append({"name": t.name, "f_vector": h.f_vector, "cells": len(h), "truncated": h.truncated})
        lines.append(f"{t.name}: {len(h)} cells, f-vector={h.f_vector}" + (" (truncated)" if h.truncated else ""))
        if args.export:
            with open(f"{args.export}.{t.name}.cells", "w", encoding="utf-8") as fh:
                fh.write(export_cells(h))
    _emit(args, {"tests": results}, lines)
    return EXIT_OK


def cmd_chi_exact(args) -> int:
    g = read_graph(args.input, args.format)
    chi = chromatic_number_exact(g, args.limit)
    greedy = greedy_upper_bound(g)
    _emit(args, {"n": g.n, "m": g.m, "chi": chi, "greedy": greedy}, [f"chi={chi} (greedy {greedy})"])
    return EXIT_OK


def cmd_fold(args) -> int:
    g = read_graph(args.input, args.format)
    reduced, vmap = fold_reduce(g)
    if args.json:
        print(json.dumps({"n": g.n, "folded_n": reduced.n, "vertex_map": vmap,
                          "edges": reduced.edges(), "labels": [reduced.label(v) for v in range(reduced.n)]},
                         indent=2))
    else:
        sys.stdout.write(to_dimacs(reduced) if args.format == "dimacs" else to_edge_list(reduced))
    return EXIT_OK


def run_selftest(battery: list[dict]) -> list[dict]:
    """Check each battery item; returns one result dict per item."""
    from .selftest import check_item

    return [check_item(item) for item in battery]


def load_battery(path: str | None) -> list[dict]:
    if path is None:
        text = resources.files("homtest").joinpath("data/selftest.json").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    try:
        battery = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"fixture file is not valid JSON: {exc}") from None
    if not isinstance(battery, list):
        raise GraphFormatError("fixture file must hold a JSON list")
    return battery


def cmd_selftest(args) -> int:
    results = run_selftest(load_battery(args.fixtures))
    ok = all(r["passed"] for r in results)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}" + ("" if r["passed"] else f": {r['detail']}")
             for r in results]
    lines.append(f"{sum(r['passed'] for r in results)}/{len(results)} passed")
    _emit(args, {"passed": ok, "results": results}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homtest", description="Homology tests for graph colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help_text, tests=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
        p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
        p.add_argument("--json", action="store_true")
        if tests:
            p.add_argument("--tests", default="k2,k3,c5", help="comma-separated registry names")
            p.add_argument("--cell-cap", type=int, default=DEFAULT_CELL_CAP)
        p.set_defaults(func=func)
        return p

    p = graph_command("bound", cmd_bound, "chromatic lower bound from the homology test")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_CHECK_DIM, help="highest homology dimension checked")
    p.add_argument("--no-fold", action="store_true", help="skip fold reduction")
    p.add_argument("--exact", action="store_true", help="also run the exact chromatic number oracle")

    p = graph_command("betti", cmd_betti, "f-vector and reduced Betti numbers of Hom(T, G)")
    p.add_argument("--max-dim", type=int, default=None, help="highest homology dimension (default: all)")
    p.add_argument("--no-fold", action="store_true")

    p = graph_command("hom-stats", cmd_hom_stats, "cell counts of Hom(T, G)")
    p.add_argument("--max-dim", type=int, default=None, help="highest cell dimension built")
    p.add_argument("--export", metavar="PREFIX", help="write cell lists to PREFIX.<test>.cells")

    p = graph_command("chi-exact", cmd_chi_exact, "exact chromatic number", tests=False)
    p.add_argument("--limit", type=int, default=20)

    graph_command("fold", cmd_fold, "fold-reduce the graph", tests=False)

    p = sub.add_parser("selftest", help="run the bundled fixture battery")
    p.add_argument("--fixtures", help="alternative battery file (JSON)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_dim", None) is not None and args.max_dim < 0:
        print("error: --max-dim must be >= 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InvariantViolation, ComplexIntegrityError, ChainComplexError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphFormatError, OSError, ValueError) as exc:
        # ChainComplexError is a ValueError too; it is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
