"""Text serialisation of graphs and certificates, plus DOT output.

All emitted text is LF-terminated. Certificate parsers take the host and
pattern graphs as context, since the text only carries vertex labels.
"""

from __future__ import annotations

import re

from .chromatic import ExtractionTrace
from .connectivity import Fan
from .graph import EditStep, Graph, GraphError, to_edge_list
from .minors import BranchSets, verify_model
from .planarity import KuratowskiWitness, K33, K5
from .topological import SubdivisionEmbedding, verify_subdivision


class ParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _lines(text: str) -> list[tuple[int, str]]:
    return [(i, s.strip()) for i, s in enumerate(text.splitlines(), 1) if s.strip()]


def _ints(line: int, words: list[str]) -> list[int]:
    try:
        return [int(w) for w in words]
    except ValueError:
        raise ParseError(line, f"expected integers, got {' '.join(words)!r}") from None


# ---------------------------------------------------------------- graphs


def format_graph(g: Graph) -> str:
    return to_edge_list(g)


def parse_graph(text: str) -> Graph:
    """Read the ``n m`` / ``u v`` edge-list format, rejecting anything irregular."""
    rows = _lines(text)
    if not rows:
        raise ParseError(1, "missing header 'n m'")
    line, header = rows[0]
    words = header.split()
    if len(words) != 2:
        raise ParseError(line, "header must be 'n m'")
    n, m = _ints(line, words)
    if n < 1:
        raise ParseError(line, "a graph needs at least one vertex")
    if m < 0:
        raise ParseError(line, "negative edge count")
    if len(rows) - 1 != m:
        raise ParseError(line, f"header announces {m} edges, found {len(rows) - 1}")
    seen = set()
    for line, row in rows[1:]:
        words = row.split()
        if len(words) != 2:
            raise ParseError(line, "edge lines must be 'u v'")
        u, v = _ints(line, words)
        if u == v:
            raise ParseError(line, f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line, f"vertex out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(line, f"duplicate edge {key[0]} {key[1]}")
        seen.add(key)
    return Graph(n, seen)


# ---------------------------------------------------------------- branch sets and edits


def format_branch_sets(m: BranchSets) -> str:
    return "".join(f"set {i}: {' '.join(map(str, sorted(s)))}\n" for i, s in enumerate(m.sets))


_SET = re.compile(r"^set (\d+):((?: -?\d+)*)$")


def parse_branch_sets(text: str, host: Graph, pattern: Graph) -> BranchSets:
    sets: dict[int, frozenset[int]] = {}
    for line, row in _lines(text):
        match = _SET.match(row)
        if not match:
            raise ParseError(line, f"expected 'set i: v ...', got {row!r}")
        i = int(match.group(1))
        if i in sets:
            raise ParseError(line, f"set {i} given twice")
        sets[i] = frozenset(_ints(line, match.group(2).split()))
    if sorted(sets) != list(range(pattern.n)):
        raise ParseError(1, f"expected sets 0..{pattern.n - 1}")
    return BranchSets(host, pattern, tuple(sets[i] for i in range(pattern.n)))


def format_edits(steps: list[EditStep]) -> str:
    return "".join(f"{s}\n" for s in steps)


def parse_edits(text: str) -> list[EditStep]:
    out = []
    for line, row in _lines(text):
        kind, *rest = row.split()
        args = _ints(line, rest)
        try:
            out.append(EditStep(kind, *args))
        except (GraphError, TypeError) as err:
            raise ParseError(line, str(err)) from None
    return out


# ---------------------------------------------------------------- subdivisions and witnesses


def format_subdivision(e: SubdivisionEmbedding) -> str:
    out = [f"branch {i}: {x}\n" for i, x in enumerate(e.branch)]
    for (i, j), p in sorted(e.paths.items()):
        out.append(f"path {i} {j}: {' '.join(map(str, p))}\n")
    return "".join(out)


_BRANCH = re.compile(r"^branch (\d+): (-?\d+)$")
_PATH2 = re.compile(r"^path (\d+) (\d+):((?: -?\d+)+)$")


def parse_subdivision(text: str, host: Graph, pattern: Graph) -> SubdivisionEmbedding:
    branch: dict[int, int] = {}
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for line, row in _lines(text):
        if match := _BRANCH.match(row):
            branch[int(match.group(1))] = int(match.group(2))
        elif match := _PATH2.match(row):
            key = (int(match.group(1)), int(match.group(2)))
            paths[key] = tuple(_ints(line, match.group(3).split()))
        else:
            raise ParseError(line, f"expected a 'branch' or 'path' line, got {row!r}")
    if sorted(branch) != list(range(pattern.n)):
        raise ParseError(1, f"expected branch vertices 0..{pattern.n - 1}")
    return SubdivisionEmbedding(host, pattern, tuple(branch[i] for i in range(pattern.n)), paths)


def format_witness(w: KuratowskiWitness) -> str:
    return f"kind: {w.kind}\n" + format_subdivision(w.embedding)


def parse_witness(text: str, host: Graph) -> KuratowskiWitness:
    rows = _lines(text)
    if not rows or not rows[0][1].startswith("kind:"):
        raise ParseError(1, "expected 'kind: K5|K33'")
    line, head = rows[0]
    kind = head.split(":", 1)[1].strip()
    pattern = {"K5": K5, "K33": K33}.get(kind)
    if pattern is None:
        raise ParseError(line, f"unknown witness kind {kind!r}")
    body = "\n".join(r for _, r in rows[1:])
    return KuratowskiWitness(kind, parse_subdivision(body, host, pattern))


# ---------------------------------------------------------------- fans and traces


def format_fan(f: Fan) -> str:
    return "".join(f"path {i}: {' '.join(map(str, p))}\n" for i, p in enumerate(f.paths))


_PATH1 = re.compile(r"^path (\d+):((?: -?\d+)+)$")


def parse_fan(text: str, center: int, targets) -> Fan:
    paths = []
    for line, row in _lines(text):
        match = _PATH1.match(row)
        if not match:
            raise ParseError(line, f"expected 'path i: x ...', got {row!r}")
        paths.append(tuple(_ints(line, match.group(2).split())))
    return Fan(center, frozenset(targets), tuple(paths))


def format_trace(t: ExtractionTrace) -> str:
    out = [f"level {lv.level}: root={lv.root} layer={lv.layer} chi={lv.chi}\n" for lv in t.levels]
    return "".join(out) + format_branch_sets(t.model)


# ---------------------------------------------------------------- DOT

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


def emit_dot(g: Graph, highlight: BranchSets | SubdivisionEmbedding | None = None) -> str:
    """Graphviz text; branch sets become coloured clusters, subdivision paths bold edges."""
    out = ["graph G {", "  node [shape=circle];"]
    bold: set[tuple[int, int]] = set()
    clustered: set[int] = set()
    if isinstance(highlight, BranchSets):
        if highlight.host != g or not verify_model(highlight):
            raise GraphError("highlight is not a valid model in this graph")
        for i, s in enumerate(highlight.sets):
            color = PALETTE[i % len(PALETTE)]
            out.append(f"  subgraph cluster_{i} {{")
            out.append(f'    label="V{i}"; color="{color}";')
            for v in sorted(s):
                out.append(f'    {v} [style=filled, fillcolor="{color}"];')
            out.append("  }")
            clustered |= s
    elif isinstance(highlight, SubdivisionEmbedding):
        if highlight.host != g or not verify_subdivision(highlight):
            raise GraphError("highlight is not a valid subdivision in this graph")
        for i, x in enumerate(highlight.branch):
            out.append(f'  {x} [style=filled, fillcolor="{PALETTE[i % len(PALETTE)]}", xlabel="x{i}"];')
            clustered.add(x)
        for p in highlight.paths.values():
            bold.update((min(a, b), max(a, b)) for a, b in zip(p, p[1:]))
    elif highlight is not None:
        raise GraphError(f"cannot highlight {type(highlight).__name__}")
    for v in g.vertices():
        if v not in clustered:
            out.append(f"  {v};")
    for a, b in g.sorted_edges():
        out.append(f"  {a} -- {b}{' [penwidth=3]' if (a, b) in bold else ''};")
    out.append("}")
    return "\n".join(out) + "\n"
