"""Vertex connectivity, Menger path packings and fans.

Internally disjoint paths come from unit-capacity augmenting paths in the
split digraph where vertex ``v`` becomes ``v_in -> v_out`` with capacity one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError


@dataclass(frozen=True)
class Fan:
    """Paths from ``center`` to distinct vertices of ``targets``, disjoint except at the center."""

    center: int
    targets: frozenset[int]
    paths: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.paths)

    def ends(self) -> list[int]:
        return [p[-1] for p in self.paths]


def is_fan(g: Graph, f: Fan) -> bool:
    seen: set[int] = set()
    for p in f.paths:
        if len(p) < 2 or p[0] != f.center or p[-1] not in f.targets:
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if set(p[1:-1]) & f.targets:
            return False
        rest = set(p[1:])
        if len(rest) != len(p) - 1 or rest & seen or f.center in rest:
            return False
        seen |= rest
    return True


def _max_flow_paths(g: Graph, x: int, y: int, limit: int | None) -> list[list[int]]:
    """Up to ``limit`` internally disjoint ``x``-``y`` paths via augmenting paths."""
    def node_in(v):
        return 2 * v

    def node_out(v):
        return 2 * v + 1

    cap: dict[tuple[int, int], int] = {}
    out_arcs: dict[int, list[int]] = {k: [] for k in range(2 * g.n)}

    def add(a, b, c):
        if (a, b) not in cap:
            out_arcs[a].append(b)
            out_arcs[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = g.n
    for v in g.vertices():
        add(node_in(v), node_out(v), big if v in (x, y) else 1)
    for a, b in g.sorted_edges():
        add(node_out(a), node_in(b), 1)
        add(node_out(b), node_in(a), 1)
    for k in out_arcs:
        out_arcs[k].sort()

    source, sink = node_out(x), node_in(y)
    flow = 0
    while limit is None or flow < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out_arcs[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    # arcs between distinct vertices carrying one unit of net flow
    carried: dict[int, list[int]] = {}
    for a_v in g.vertices():
        for b_v in sorted(g.neighbors(a_v)):
            arc = (node_out(a_v), node_in(b_v))
            if cap[arc] == 0 and cap[(node_in(b_v), node_out(a_v))] == 1:
                carried.setdefault(a_v, []).append(b_v)
    paths = []
    for first in carried.get(x, []):
        walk = [x, first]
        while walk[-1] != y:
            walk.append(carried[walk[-1]][0])
        paths.append(walk)
    return paths


def local_connectivity(g: Graph, x: int, y: int) -> int:
    """Maximum number of internally disjoint ``x``-``y`` paths."""
    if x == y:
        raise GraphError("local connectivity needs two distinct vertices")
    g._check_vertex(x)
    g._check_vertex(y)
    return len(_max_flow_paths(g, x, y, None))


def disjoint_paths(g: Graph, x: int, y: int, k: int) -> list[tuple[int, ...]] | None:
    """``k`` internally disjoint ``x``-``y`` paths, or ``None`` if fewer exist."""
    if x == y:
        raise GraphError("disjoint_paths needs x != y")
    g._check_vertex(x)
    g._check_vertex(y)
    if k < 1:
        raise GraphError("k must be positive")
    paths = _max_flow_paths(g, x, y, k)
    if len(paths) < k:
        return None
    return [tuple(p) for p in paths]


def vertex_connectivity(g: Graph) -> int:
    """``n - 1`` for complete graphs, else the least pairwise separator size over non-adjacent pairs."""
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    best = g.n - 1
    for x, y in combinations(g.vertices(), 2):
        if not g.has_edge(x, y):
            best = min(best, len(_max_flow_paths(g, x, y, best)))
            if best == 0:
                break
    return best


def fan(g: Graph, x: int, targets) -> Fan | None:
    """Largest ``x, U``-fan, found through an extra vertex joined to all of ``U``.

    If ``g`` is ``k``-connected and ``|U| >= k`` the fan has at least ``k``
    paths. Returns ``None`` when no path from ``x`` reaches ``U``.
    """
    u_set = frozenset(targets)
    g._check_vertex(x)
    for u in u_set:
        g._check_vertex(u)
    if not u_set:
        raise GraphError("fan needs a nonempty target set")
    if x in u_set:
        raise GraphError("the fan center may not be a target")
    extra = g.n
    aux = Graph(g.n + 1, list(g.edges) + [(u, extra) for u in u_set])
    raw = _max_flow_paths(aux, x, extra, None)
    paths = []
    for p in raw:
        cut = next(i for i, v in enumerate(p) if v in u_set)
        paths.append(tuple(p[: cut + 1]))
    if not paths:
        return None
    paths.sort(key=lambda p: p[-1])
    return Fan(x, u_set, tuple(paths))
