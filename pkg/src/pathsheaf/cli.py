"""Command-line interface.

Exit codes: 0 ok, 1 input error, 2 not a section (or naturality failure),
3 no path, 4 enumeration too large.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FilePath

from .distance_sheaf import DistancePathSheaf
from .errors import PathSheafError, TooLarge
from .formats import (
    DocumentError,
    format_section,
    format_section_inline,
    read_graph,
    read_heuristic,
    read_section,
    to_dot,
)
from .morphism import build_phi, check_naturality
from .oracle import enumerate_global_sections_dp, enumerate_global_sections_p
from .path_sheaf import PathSheaf
from .pathfinding import NoPath, astar_cost, dijkstra_dp, search_p
from .sheaf import inconsistent_pairs, is_global_section

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_SECTION = 2
EXIT_NO_PATH = 3
EXIT_TOO_LARGE = 4

PHI_PROBES = ("1", "1/2", "7", "355/113")

SHEAVES = {"path": PathSheaf, "distance": DistancePathSheaf}


def _emit(text: str, output: str | None) -> None:
    if output:
        FilePath(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    sheaf = SHEAVES[args.sheaf](g)
    s = read_section(args.section, sheaf)
    bad = inconsistent_pairs(sheaf, s)
    if bad:
        print(f"not a section: {len(bad)} inconsistent pair(s)")
        for v, e in bad:
            print(f"  {v} {e}")
        return EXIT_NOT_SECTION
    if is_global_section(sheaf, s):
        print("global section")
    else:
        print(f"local section ({len(s)} of {len(sheaf.cells())} cells)")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    if args.engine == "astar" and not args.heuristic:
        raise DocumentError("--engine astar requires --heuristic", "<arguments>")
    if args.engine != "astar" and args.heuristic:
        raise DocumentError("--heuristic only applies to --engine astar", "<arguments>")

    if args.engine == "dp":
        sheaf = DistancePathSheaf(g)
        result = dijkstra_dp(sheaf)
    else:
        sheaf = PathSheaf(g)
        cost_fn = None
        if args.engine == "astar":
            cost_fn = astar_cost(sheaf, read_heuristic(args.heuristic, g))
        result = search_p(sheaf, cost_fn)

    if isinstance(result, NoPath):
        print("no path from source to sink exists")
        return EXIT_NO_PATH
    print(f"path: {result.path}")
    print(f"length: {result.length}")
    document = format_section(sheaf, result.global_section)
    if args.output:
        FilePath(args.output).write_text(document)
    else:
        sys.stdout.write("\n" + document)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = read_graph(args.graph)
    sheaf = SHEAVES[args.sheaf](g)
    if args.sheaf == "path":
        sections = enumerate_global_sections_p(sheaf)
    else:
        sections = enumerate_global_sections_dp(sheaf)
    lines = [str(len(sections))] + [format_section_inline(sheaf, s) for s in sections]
    _emit("".join(line + "\n" for line in lines), args.output)
    return EXIT_OK


def cmd_check_phi(args) -> int:
    g = read_graph(args.graph)
    m = build_phi(DistancePathSheaf(g), PathSheaf(g))
    probes = args.probe or PHI_PROBES
    violations = check_naturality(m, probes)
    if violations:
        print(f"naturality fails at {len(violations)} square(s)")
        for v, e, x in violations:
            print(f"  {v} {e} {x}")
        return EXIT_NOT_SECTION
    print(f"naturality holds (probe distances: {', '.join(str(p) for p in probes)})")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = read_graph(args.graph)
    s = None
    if args.section:
        s = read_section(args.section, SHEAVES[args.sheaf](g))
    _emit(to_dot(g, s), args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors; argparse's default 2 means "not a section" here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pathsheaf",
        description="Path sheaves on weighted graphs and Dijkstra as section extension.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--graph", required=True, metavar="FILE")
        p.set_defaults(func=func)
        return p

    p = command("verify", cmd_verify, "check whether a section document is a section")
    p.add_argument("--sheaf", choices=SHEAVES, default="path")
    p.add_argument("--section", required=True, metavar="FILE")

    p = command("solve", cmd_solve, "find a shortest source-to-sink path")
    p.add_argument("--engine", choices=("dp", "p", "astar"), default="dp")
    p.add_argument("--heuristic", metavar="FILE")
    p.add_argument("--output", metavar="FILE", help="write the section document here")

    p = command(
        "enumerate",
        cmd_enumerate,
        "list global sections (all of them for path, one per simple path for distance)",
    )
    p.add_argument("--sheaf", choices=SHEAVES, default="path")
    p.add_argument("--output", metavar="FILE")

    p = command("check-phi", cmd_check_phi, "verify the forgetful morphism is natural")
    p.add_argument("--probe", action="append", metavar="X", help="probe distance (repeatable)")

    p = command("export-dot", cmd_export_dot, "render the graph (and a section) as DOT")
    p.add_argument("--sheaf", choices=SHEAVES, default="path")
    p.add_argument("--section", metavar="FILE")
    p.add_argument("--output", metavar="FILE")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: TooLarge: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (PathSheafError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
