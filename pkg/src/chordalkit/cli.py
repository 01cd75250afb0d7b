"""``chordalkit`` command line.

Exit codes are the same for every command: 0 success (or chordal), 1 the
input is not chordal and no answer could be produced, 2 bad input or usage.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import generators
from .coloring import (
    EXACT_LIMIT,
    Coloring,
    clique_number_chordal,
    exact_coloring,
    format_coloring,
    greedy_coloring,
    maximal_cliques_chordal,
    maximal_cliques_exact,
)
from .errors import ChordalKitError
from .graph import Graph
from .io import certificate_to_dict, detect_format, format_dimacs, format_edge_list, read_graph
from .nested import parse_strategy, peo_from_sequence, strategy_name
from .orientation import (
    dependent_arcs,
    format_orientation,
    format_spectrum,
    orient_by_ordering,
    orientation_spectrum,
)
from .recognition import Chordal, format_cycle, is_chordal

EXIT_OK, EXIT_NOT_CHORDAL, EXIT_INPUT = 0, 1, 2


class _Fail(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _load(args) -> Graph:
    return read_graph(args.path, args.format)


def _certify(args, g: Graph):
    strategy = parse_strategy(args.strategy)
    return is_chordal(g, strategy)


def cmd_check(args) -> int:
    g = _load(args)
    cert = _certify(args, g)
    if args.output == "json":
        _emit({"chordal": cert.chordal, "certificate": certificate_to_dict(cert)})
    elif isinstance(cert, Chordal):
        sys.stdout.write("chordal: true\n")
        sys.stdout.write(f"strategy: {strategy_name(cert.sequence.strategy)}\n")
        sys.stdout.write(certificate_to_dict(cert)["text"])
    else:
        sys.stdout.write("chordal: false\n" + format_cycle(cert.cycle))
    return EXIT_OK if cert.chordal else EXIT_NOT_CHORDAL


def cmd_peo(args) -> int:
    g = _load(args)
    cert = _certify(args, g)
    if not isinstance(cert, Chordal):
        if args.output == "json":
            _emit({"chordal": False, "cycle": list(cert.cycle.vertices)})
        else:
            sys.stdout.write("chordal: false\n" + format_cycle(cert.cycle))
        print("no perfect elimination ordering: graph is not chordal", file=sys.stderr)
        return EXIT_NOT_CHORDAL
    order = peo_from_sequence(g, cert.sequence)
    if args.output == "json":
        _emit({"chordal": True, "peo": order})
    else:
        sys.stdout.write(" ".join(map(str, order)) + "\n")
    return EXIT_OK


def _exact_or_fail(g: Graph, what: str) -> Graph:
    if len(g) > EXACT_LIMIT:
        raise _Fail(
            f"graph is not chordal and has {len(g)} > {EXACT_LIMIT} vertices; "
            f"exact {what} search refused", EXIT_NOT_CHORDAL)
    print(f"graph is not chordal; computing {what} by exact search", file=sys.stderr)
    return g


def cmd_color(args) -> int:
    g = _load(args)
    cert = _certify(args, g)
    if isinstance(cert, Chordal):
        coloring: Coloring = greedy_coloring(g, peo_from_sequence(g, cert.sequence)[::-1])
    else:
        coloring = exact_coloring(_exact_or_fail(g, "coloring"))
    if args.output == "json":
        _emit({
            "chordal": cert.chordal,
            "colors": coloring.color_count,
            "coloring": {str(x): c for x, c in sorted(coloring.assignment.items())},
        })
    else:
        sys.stdout.write(f"colors {coloring.color_count}\n" + format_coloring(coloring))
    return EXIT_OK


def cmd_clique(args) -> int:
    g = _load(args)
    cert = _certify(args, g)
    if isinstance(cert, Chordal):
        peo = peo_from_sequence(g, cert.sequence)
        omega = clique_number_chordal(g, peo)
        cliques = maximal_cliques_chordal(g, peo)
    else:
        cliques = maximal_cliques_exact(_exact_or_fail(g, "clique"))
        omega = max((len(c) for c in cliques), default=0)
    rows = [sorted(c) for c in cliques]
    if args.output == "json":
        _emit({"chordal": cert.chordal, "omega": omega, "cliques": rows})
    else:
        out = [f"omega {omega}", f"cliques {len(rows)}"]
        out.extend(" ".join(map(str, r)) for r in rows)
        sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def _parse_order(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise _Fail(f"bad vertex ordering {text!r}", EXIT_INPUT) from None


def cmd_orient(args) -> int:
    g = _load(args)
    if args.action == "spectrum":
        report = orientation_spectrum(g, threads=args.threads)
        if args.output == "json":
            _emit({
                "d_min": report.d_min,
                "d_max": report.d_max,
                "achievable": list(report.achievable_d),
                "fully_orientable": report.fully_orientable,
            })
        else:
            sys.stdout.write(format_spectrum(report))
        return EXIT_OK

    if args.order is None:
        raise _Fail("orient analyze needs --order", EXIT_INPUT)
    d = orient_by_ordering(g, _parse_order(args.order))
    dep = sorted(dependent_arcs(d))
    if args.output == "json":
        _emit({"d": len(dep), "dependent": dep, "arcs": d.sorted_arcs()})
    else:
        lines = [f"d {len(dep)}", "dependent:"]
        lines.extend(f"{u} -> {v}" for u, v in dep)
        sys.stdout.write("\n".join(lines) + "\narcs:\n" + format_orientation(d))
    return EXIT_OK


_FAMILIES = {
    "path": (generators.gen_path, (int,)),
    "cycle": (generators.gen_cycle, (int,)),
    "complete": (generators.gen_complete, (int,)),
    "star": (generators.gen_star, (int,)),
    "kpartite": (generators.gen_complete_multipartite, (int, int)),
    "chordal": (generators.gen_random_chordal, (int, int)),
    "random": (generators.gen_random_graph, (int, float)),
}


def cmd_gen(args) -> int:
    func, types = _FAMILIES[args.family]
    if len(args.params) != len(types):
        raise _Fail(
            f"gen {args.family} takes {len(types)} parameter(s), got {len(args.params)}",
            EXIT_INPUT)
    try:
        params = [t(p) for t, p in zip(types, args.params)]
    except ValueError:
        raise _Fail(f"bad parameters {args.params} for gen {args.family}", EXIT_INPUT) from None
    if args.family in ("chordal", "random"):
        params.append(args.seed)
    g = func(*params)
    target = args.output_path or "-"
    fmt = args.format or ("edges" if target == "-" else detect_format(target))
    text = format_dimacs(g) if fmt == "dimacs" else format_edge_list(g)
    if target == "-":
        sys.stdout.write(text)
    else:
        with open(target, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordalkit",
        description="Chordal graph recognition with verifiable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edges", "dimacs"),
                        help="input format (default: .col means dimacs, else edges)")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--strategy", default="all",
                        help="removal strategy: all, single or random:<seed>")

    for name, func, help_ in (
        ("check", cmd_check, "decide chordality and print a certificate"),
        ("peo", cmd_peo, "print a perfect elimination ordering"),
        ("color", cmd_color, "print a minimum coloring"),
        ("clique", cmd_clique, "print the clique number and maximal cliques"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("path")
        p.set_defaults(func=func)

    p = sub.add_parser("orient", parents=[common], help="dependent-arc analysis")
    p.add_argument("action", choices=("spectrum", "analyze"))
    p.add_argument("path")
    p.add_argument("--order", help="vertex ordering for analyze, e.g. '0 1 2'")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("edges", "dimacs"))
    p.add_argument("-o", "--output-path", dest="output_path")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"chordalkit: {exc}", file=sys.stderr)
        return exc.code
    except (ChordalKitError, ValueError, OSError) as exc:
        print(f"chordalkit: {exc}", file=sys.stderr)
        if args.command == "gen":
            print(f"usage: chordalkit gen {{{','.join(sorted(_FAMILIES))}}} PARAMS... "
                  "[--seed S] [-o PATH]", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
