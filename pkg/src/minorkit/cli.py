"""Command-line front end.

Exit status: 0 when the decision is true or the extraction succeeded, 1 when
it is false or nothing was found, 2 for usage errors and failed preconditions.

Graph arguments are edge-list files or named graphs: ``kN`` (complete),
``k33`` / ``kA,B`` (complete bipartite), ``cN`` (cycle), ``pN`` (path),
``wN`` (wheel on an N-cycle) and ``petersen``.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import chromatic, connectivity, formats, minors, planarity, topological
from .graph import (
    Graph,
    GraphError,
    complete,
    complete_bipartite,
    cycle,
    path,
    petersen,
    wheel,
)

VERBS = (
    "check-minor", "check-subdivision", "minimize", "planarity", "kuratowski",
    "connectivity", "fan", "chromatic", "extract-k3", "extract-k4",
    "extract-kminor", "hadwiger-scan", "to-dot",
)


class UsageError(Exception):
    pass


def named_graph(token: str) -> Graph | None:
    token = token.lower()
    if token == "petersen":
        return petersen()
    if token == "k33":
        return complete_bipartite(3, 3)
    if match := re.fullmatch(r"k(\d+),(\d+)", token):
        return complete_bipartite(int(match.group(1)), int(match.group(2)))
    builders = {"k": complete, "c": cycle, "p": path, "w": wheel}
    if match := re.fullmatch(r"([kcpw])(\d+)", token):
        return builders[match.group(1)](int(match.group(2)))
    return None


def load_graph(arg: str) -> Graph:
    file = Path(arg)
    if file.is_file():
        return formats.parse_graph(file.read_text(encoding="utf-8"))
    g = named_graph(arg)
    if g is None:
        raise UsageError(f"{arg!r} is neither a readable file nor a named graph")
    return g


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minorkit", description="Graph minors with certificates.")
    sub = parser.add_subparsers(dest="verb", required=True)
    two = ("check-minor", "check-subdivision", "minimize")
    one = ("planarity", "kuratowski", "connectivity", "chromatic", "extract-k3", "extract-k4")
    for verb in two:
        p = sub.add_parser(verb)
        p.add_argument("host")
        p.add_argument("pattern")
    for verb in one:
        p = sub.add_parser(verb)
        p.add_argument("graph")
        if verb in ("connectivity", "chromatic"):
            p.add_argument("-k", type=int, help="exit 0 only if the value is at least k")
    p = sub.add_parser("fan")
    p.add_argument("graph")
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--targets", required=True, help="comma separated target vertices")
    p.add_argument("-k", type=int, help="exit 0 only if the fan has at least k paths")
    p = sub.add_parser("extract-kminor")
    p.add_argument("graph")
    p.add_argument("-k", type=int, required=True)
    p = sub.add_parser("hadwiger-scan")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int)
    p = sub.add_parser("to-dot")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--minor", metavar="PATTERN", help="highlight a model of PATTERN")
    group.add_argument("--subdivision", metavar="PATTERN", help="highlight a subdivision of PATTERN")
    return parser


def _dispatch(args) -> tuple[int, str]:
    verb = args.verb
    if verb == "check-minor":
        g, h = load_graph(args.host), load_graph(args.pattern)
        m = minors.find_minor_model(g, h)
        return (0, formats.format_branch_sets(m)) if m else (1, "no minor\n")
    if verb == "check-subdivision":
        g, h = load_graph(args.host), load_graph(args.pattern)
        e = topological.find_subdivision(g, h)
        return (0, formats.format_subdivision(e)) if e else (1, "no subdivision\n")
    if verb == "minimize":
        g, h = load_graph(args.host), load_graph(args.pattern)
        w = minors.minimize_minor_witness(g, h)
        if w is None:
            return 1, "no minor\n"
        edges = "".join(f"edge {a} {b}\n" for a, b in sorted(w.edges))
        head = f"vertices: {' '.join(map(str, sorted(w.vertices)))}\n"
        return 0, head + edges + formats.format_branch_sets(w.model())
    if verb == "planarity":
        planar = planarity.is_planar(load_graph(args.graph))
        return (0, "planar\n") if planar else (1, "not planar\n")
    if verb == "kuratowski":
        w = planarity.kuratowski_witness(load_graph(args.graph))
        return (0, formats.format_witness(w)) if w else (1, "planar\n")
    if verb == "connectivity":
        kappa = connectivity.vertex_connectivity(load_graph(args.graph))
        ok = args.k is None or kappa >= args.k
        return (0 if ok else 1), f"kappa: {kappa}\n"
    if verb == "fan":
        g = load_graph(args.graph)
        targets = {int(t) for t in args.targets.split(",") if t.strip()}
        f = connectivity.fan(g, args.root, targets)
        if f is None:
            return 1, "no fan\n"
        ok = args.k is None or f.size >= args.k
        return (0 if ok else 1), f"size: {f.size}\n" + formats.format_fan(f)
    if verb == "chromatic":
        col = chromatic.optimal_coloring(load_graph(args.graph))
        ok = args.k is None or col.k >= args.k
        colors = " ".join(map(str, col.colors))
        return (0 if ok else 1), f"chi: {col.k}\ncolors: {colors}\n"
    if verb == "extract-k3":
        return 0, formats.format_branch_sets(chromatic.extract_k3(load_graph(args.graph)))
    if verb == "extract-k4":
        return 0, formats.format_branch_sets(chromatic.extract_k4(load_graph(args.graph)))
    if verb == "extract-kminor":
        trace = chromatic.extract_clique_minor(load_graph(args.graph), args.k)
        return 0, formats.format_trace(trace)
    if verb == "hadwiger-scan":
        exhaustive = args.exhaustive or not args.samples
        if not exhaustive and args.seed is None:
            raise UsageError("sampling mode needs --seed")
        report = chromatic.hadwiger_scan(
            args.n_max, args.k_max, exhaustive=exhaustive, samples=args.samples, seed=args.seed
        )
        text = report.summary() + "\n"
        for g, k in report.counterexamples:
            text += f"counterexample k={k}:\n" + formats.format_graph(g)
        return (1 if report.counterexamples else 0), text
    if verb == "to-dot":
        g = load_graph(args.graph)
        highlight = None
        if args.minor:
            highlight = minors.find_minor_model(g, load_graph(args.minor))
        elif args.subdivision:
            highlight = topological.find_subdivision(g, load_graph(args.subdivision))
        if (args.minor or args.subdivision) and highlight is None:
            return 1, formats.emit_dot(g)
        return 0, formats.emit_dot(g, highlight)
    raise UsageError(f"unknown verb {verb!r}")


def run(argv: list[str]) -> tuple[int, str]:
    """Run one command and return ``(exit status, report text)``."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as stop:
        return (2 if stop.code else 0), ""
    try:
        return _dispatch(args)
    except (UsageError, GraphError, OSError) as err:
        return 2, f"error: {err}\n"


def main(argv: list[str] | None = None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if status == 2 else sys.stdout
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
