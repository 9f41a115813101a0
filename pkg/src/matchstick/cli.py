"""Command line interface.

Exit codes: 0 success, 1 check failure or counterexample, 2 usage or parse
error, 3 ambiguous floor, 4 search too large.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from matchstick import bounds
from matchstick.construct import penny_graph_of, spiral_points
from matchstick.errors import AmbiguousFloor, TooLarge
from matchstick.geometry import DEFAULT_TOLERANCE, Tolerance
from matchstick.graphio import ParseError, load_graph, render_svg, save_graph
from matchstick.planegraph import (
    MatchstickGraph,
    angle_sum_check,
    blocks,
    boundary_profile,
    double_count_check,
    extract_faces,
    find_violations,
    isoperimetric_check,
)
from matchstick.search import SearchConfig, lattice_max_edges

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_AMBIGUOUS, EXIT_TOO_LARGE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _sweep_max(text: str) -> int:
    value = int(text)
    if value < 4:
        raise argparse.ArgumentTypeError(f"must be >= 4, got {value}")
    return value


def _tolerance(text: str) -> Tolerance:
    try:
        return Tolerance(float(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _load(path: str, tol_arg: Optional[Tolerance]):
    graph, file_tol = load_graph(path)
    return graph, tol_arg or file_tol or DEFAULT_TOLERANCE


def _report_violations(violations) -> None:
    for v in violations:
        print(v)


def cmd_validate(args) -> int:
    graph, tol = _load(args.path, args.tolerance)
    violations = find_violations(graph, tol)
    if violations:
        _report_violations(violations)
        return EXIT_FAIL
    print("VALID")
    return EXIT_OK


def _verdict(ok: Optional[bool]) -> str:
    if ok is None:
        return "SKIP"
    return "PASS" if ok else "FAIL"


def analyze(m: MatchstickGraph) -> dict:
    faces = extract_faces(m)
    decomposition = blocks(m)
    report = bounds.full_report(m, faces)
    checks = {
        "euler": (m.n - m.e + faces.f == 1) if decomposition.is_connected else None,
        "double_count": None,
        "angle_sum": None,
        "isoperimetric": None,
    }
    boundary = None
    if decomposition.is_biconnected:
        prof = boundary_profile(m, faces)
        boundary = {
            "b": prof.b,
            "b_hist": {str(k): v for k, v in prof.b_hist.items()},
            "g_b": prof.g_b,
            "has_chord": prof.has_chord,
            "area": prof.area,
            "cycle": list(prof.cycle),
        }
        checks["double_count"] = double_count_check(m)
        checks["angle_sum"] = angle_sum_check(m)
        checks["isoperimetric"] = isoperimetric_check(m)
    return {
        "graph": {
            "n": m.n,
            "e": m.e,
            "connected": decomposition.is_connected,
            "biconnected": decomposition.is_biconnected,
            "cut_vertices": sorted(decomposition.cut_vertices),
            "blocks": len(decomposition.blocks),
        },
        "faces": {
            "f": faces.f,
            "f3": faces.f3,
            "g": faces.g,
            "f_hist": {str(k): v for k, v in faces.f_hist.items()},
            "bounded": [list(faces.faces[fid]) for fid in faces.bounded],
        },
        "boundary": boundary,
        "bounds": report.as_dict(),
        "checks": {k: _verdict(v) for k, v in checks.items()},
    }


def _print_analysis(result: dict) -> None:
    g, f, rep = result["graph"], result["faces"], result["bounds"]
    print(f"n = {g['n']}")
    print(f"e = {g['e']}")
    if result["boundary"] is not None:
        print(f"b = {result['boundary']['b']}")
    else:
        print("b = - (not 2-connected)")
    print(f"f = {f['f']}  f3 = {f['f3']}  g = {f['g']}")
    print(f"conjectured max edges   = {rep['conjectured_max']}")
    print(f"face-count bound floor  = {rep['thm1_rhs_floor']}")
    print(f"certified bound floor   = {rep['thm3_rhs_floor']}")
    print(f"max triangular faces    = {rep['cor1_max_triangles']}")
    for name, ok in rep["verdicts"].items():
        print(f"{name:<18} {'PASS' if ok else 'FAIL'}")
    for name, verdict in result["checks"].items():
        print(f"{name:<18} {verdict}")


def cmd_analyze(args) -> int:
    graph, tol = _load(args.path, args.tolerance)
    violations = find_violations(graph, tol)
    if violations:
        _report_violations(violations)
        return EXIT_FAIL
    if graph.n == 0:
        print("empty graph", file=sys.stderr)
        return EXIT_USAGE
    result = analyze(MatchstickGraph(graph, tol))
    if args.json:
        print(json.dumps(result, sort_keys=True, indent=2))
    else:
        _print_analysis(result)
    failed = any(v == "FAIL" for v in result["checks"].values()) or not all(
        result["bounds"]["verdicts"].values()
    )
    return EXIT_FAIL if failed else EXIT_OK


def cmd_generate(args) -> int:
    m = penny_graph_of(spiral_points(args.n))
    try:
        save_graph(m.graph, args.out)
        if args.svg:
            Path(args.svg).write_text(render_svg(m.graph, pennies=args.pennies))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"n = {m.n}, e = {m.e}")
    return EXIT_OK


def cmd_settled(args) -> int:
    try:
        values = bounds.settled_list(args.max)
    except AmbiguousFloor as exc:
        print(f"ambiguous floor at n = {exc.n}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    for n in values:
        print(n)
    return EXIT_OK


def cmd_lemmas(args) -> int:
    bad = bounds.lemma_sqrt2_sweep(args.sweep_max)
    if bad is not None:
        print(f"counterexample (n, n1, n2) = {bad}")
        return EXIT_FAIL
    print(f"lemma sqrt2: all admissible triples with n <= {args.sweep_max} hold")
    for n in range(4, args.sweep_max + 1):
        for b in bounds.inequality_three_range(n):
            if not bounds.inequality_three_check(n, b):
                print(f"counterexample inequality three (n, b) = {(n, b)}")
                return EXIT_FAIL
    print(f"inequality three: all (n, b) with n <= {args.sweep_max} hold")
    for name, ok in bounds.constant_inequalities().items():
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            return EXIT_FAIL
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        cfg = SearchConfig(args.n, args.radius, prune=not args.no_prune)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        best, witness = lattice_max_edges(cfg, workers=args.workers)
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    print(best)
    out = args.out or f"search_n{args.n}.json"
    save_graph(penny_graph_of(witness).graph, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matchstick", description="Matchstick graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check unit lengths, crossings and duplicates")
    p.add_argument("path")
    p.add_argument("--tolerance", type=_tolerance, default=None)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="faces, boundary, bounds and identity checks")
    p.add_argument("path")
    p.add_argument("--tolerance", type=_tolerance, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="write the n-point spiral penny graph")
    p.add_argument("n", type=_positive)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.add_argument("--pennies", action="store_true", help="draw the radius-1/2 discs")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("settled", help="n for which the upper bound meets the construction")
    p.add_argument("--max", type=_positive, default=130)
    p.set_defaults(func=cmd_settled)

    p = sub.add_parser("lemmas", help="exhaustive sweeps of the square-root lemmas")
    p.add_argument("--sweep-max", type=_sweep_max, default=500)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("search", help="exhaustive lattice maximum for small n")
    p.add_argument("n", type=_positive)
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--out")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
