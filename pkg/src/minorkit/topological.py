"""Topological minors: subdivisions of a pattern sitting inside a host."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, PreconditionError, max_degree
from .minors import BranchSets, MinimalWitness, minimize_minor_witness, verify_model

PathKey = tuple[int, int]


@dataclass(frozen=True)
class SubdivisionEmbedding:
    """Branch vertex ``branch[i]`` for each pattern vertex and one host path per pattern edge.

    ``paths[(i, j)]`` with ``i < j`` runs from ``branch[i]`` to ``branch[j]``.
    """

    host: Graph
    pattern: Graph
    branch: tuple[int, ...]
    paths: dict[PathKey, tuple[int, ...]] = field(hash=False)


def verify_subdivision(e: SubdivisionEmbedding) -> bool:
    g, h = e.host, e.pattern
    for v in list(e.branch) + [w for p in e.paths.values() for w in p]:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"vertex {v!r} not in host with n={g.n}")
    if len(e.branch) != h.n or len(set(e.branch)) != h.n:
        return False
    if set(e.paths) != set(h.edges):
        return False
    branch = set(e.branch)
    interior_seen: set[int] = set()
    for (i, j), p in e.paths.items():
        if len(p) < 2 or p[0] != e.branch[i] or p[-1] != e.branch[j]:
            return False
        if len(set(p)) != len(p):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        interior = set(p[1:-1])
        if interior & branch or interior & interior_seen:
            return False
        interior_seen |= interior
    return True


def subdivision_to_model(e: SubdivisionEmbedding) -> BranchSets:
    """Each branch vertex absorbs the interior of the paths it is the smaller endpoint of."""
    if not verify_subdivision(e):
        raise GraphError("embedding does not verify")
    sets = [{x} for x in e.branch]
    for (i, j), p in sorted(e.paths.items()):
        sets[i].update(p[1:-1])
    model = BranchSets(e.host, e.pattern, tuple(frozenset(s) for s in sets))
    assert verify_model(model)
    return model


# ---------------------------------------------------------------- exact search


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _reachable(adj, a: int, b: int, free: int) -> bool:
    """Is there an ``a``-``b`` path with interior inside ``free``?"""
    if adj[a] >> b & 1:
        return True
    seen = adj[a] & free
    frontier = seen
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= adj[v]
        if grow >> b & 1:
            return True
        frontier = grow & free & ~seen
        seen |= frontier
    return False


def _paths_between(adj, a: int, b: int, free: int) -> list[tuple[int, ...]]:
    """All simple ``a``-``b`` paths with interior in ``free``, shortest first."""
    out = []
    stack = [a]

    def walk(v: int, used: int) -> None:
        for w in _bits(adj[v]):
            if w == b:
                out.append(tuple(stack) + (b,))
            elif free >> w & 1 and not used >> w & 1:
                stack.append(w)
                walk(w, used | (1 << w))
                stack.pop()

    walk(a, 0)
    out.sort(key=lambda p: (len(p), p))
    return out


class _SubdivisionSearch:
    def __init__(self, g: Graph, h: Graph):
        self.g, self.h = g, h
        self.adj = g.masks
        self.hdeg = [len(h.neighbors(v)) for v in h.vertices()]
        self.gdeg = [len(g.neighbors(v)) for v in g.vertices()]
        order: list[int] = []
        rest = set(h.vertices())
        while rest:
            v = min(rest, key=lambda v: (-sum(w not in rest for w in h.neighbors(v)), -self.hdeg[v], v))
            order.append(v)
            rest.discard(v)
        self.order = order
        pos = {v: i for i, v in enumerate(order)}
        self.pos = pos
        self.to_route = [
            [(p, q) for q in sorted(h.neighbors(p), key=pos.get) if pos[q] < i]
            for i, p in enumerate(order)
        ]
        self.branch = [-1] * h.n
        self.paths: dict[PathKey, tuple[int, ...]] = {}

    def run(self):
        return self.place(0, 0)

    def ports_ok(self, upto: int, used: int) -> bool:
        """Every placed branch vertex keeps enough free exits for its unrouted paths."""
        free = ~used
        for q in self.order[: upto + 1]:
            x = self.branch[q]
            waiting = 0
            targets = 0
            for w in self.h.neighbors(q):
                key = (min(q, w), max(q, w))
                if key in self.paths:
                    continue
                waiting += 1
                if self.branch[w] >= 0:
                    targets |= 1 << self.branch[w]
            if waiting and (self.adj[x] & (free | targets)).bit_count() < waiting:
                return False
        return True

    def place(self, i: int, used: int) -> bool:
        if i == len(self.order):
            return True
        p = self.order[i]
        need = self.hdeg[p]
        for x in range(self.g.n):
            if used >> x & 1 or self.gdeg[x] < need:
                continue
            self.branch[p] = x
            grown = used | (1 << x)
            if self.ports_ok(i, grown) and self.route(i, 0, grown):
                return True
        self.branch[p] = -1
        return False

    def route(self, i: int, k: int, used: int) -> bool:
        edges = self.to_route[i]
        if k == len(edges):
            return self.place(i + 1, used)
        free = ~used
        for p, q in edges[k:]:
            if not _reachable(self.adj, self.branch[p], self.branch[q], free):
                return False
        p, q = edges[k]
        a, b = self.branch[p], self.branch[q]
        key = (min(p, q), max(p, q))
        for walk in _paths_between(self.adj, a, b, free & ((1 << self.g.n) - 1)):
            interior = 0
            for v in walk[1:-1]:
                interior |= 1 << v
            oriented = walk if p < q else walk[::-1]
            self.paths[key] = oriented
            grown = used | interior
            if self.ports_ok(i, grown) and self.route(i, k + 1, grown):
                return True
            del self.paths[key]
        return False


def _degree_dominated(g: Graph, h: Graph) -> bool:
    gd = sorted((len(g.neighbors(v)) for v in g.vertices()), reverse=True)
    hd = sorted((len(h.neighbors(v)) for v in h.vertices()), reverse=True)
    return all(a >= b for a, b in zip(gd, hd))


def find_subdivision(g: Graph, h: Graph) -> SubdivisionEmbedding | None:
    """Exact search for a subdivision of ``h`` in ``g``.

    Branch vertices are assigned lowest label first; as soon as both ends of
    a pattern edge are placed its path is routed, trying shorter paths first.
    """
    if h.n > g.n or h.m > g.m or not _degree_dominated(g, h):
        return None
    search = _SubdivisionSearch(g, h)
    if not search.run():
        return None
    return SubdivisionEmbedding(g, h, tuple(search.branch), dict(search.paths))


# ---------------------------------------------------------------- minor to subdivision


def tree_path(adj: dict[int, set[int]], inside: frozenset[int], a: int, b: int) -> list[int]:
    parent = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w in sorted(adj[v]):
            if w in inside and w not in parent:
                parent[w] = v
                queue.append(w)
    out = [b]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    return out[::-1]


def choose_branch_vertex(witness: MinimalWitness, i: int) -> int:
    """Vertex of tree ``V_i`` whose paths to the cross-edge ends meet only at itself.

    With one attachment vertex it is that vertex. With two, it is the one
    carrying two cross edges if there is such, otherwise the one attached to
    the lower-labelled pattern neighbour. With three it is the first vertex
    on the path from the first to the third that also lies on the path from
    the second to the third.
    """
    inside = witness.sets[i]
    ends: list[int] = []
    shared = None
    for j in sorted(witness.pattern.neighbors(i)):
        w = witness.cross_edges(i, j)[0][0]
        if w in ends:
            shared = w
        else:
            ends.append(w)
    if not ends:
        return min(inside)
    if len(ends) <= 2:
        return ends[0] if shared is None else shared
    if len(ends) > 3:
        raise PreconditionError("branch tree has more than three attachment vertices")
    adj = witness.adjacency
    first = tree_path(adj, inside, ends[0], ends[2])
    second = set(tree_path(adj, inside, ends[1], ends[2]))
    return next(v for v in first if v in second)


def subdivision_from_witness(witness: MinimalWitness) -> SubdivisionEmbedding:
    """Join branch vertices through their trees and the unique cross edges."""
    h = witness.pattern
    branch = tuple(choose_branch_vertex(witness, i) for i in h.vertices())
    adj = witness.adjacency
    paths = {}
    for i, j in h.sorted_edges():
        (wi, wj), = witness.cross_edges(i, j)
        left = tree_path(adj, witness.sets[i], branch[i], wi)
        right = tree_path(adj, witness.sets[j], wj, branch[j])
        paths[(i, j)] = tuple(left + right)
    out = SubdivisionEmbedding(witness.host, h, branch, paths)
    if not verify_subdivision(out):
        raise GraphError("constructed paths are not a subdivision; witness was not minimal")
    return out


def minor_to_subdivision(
    g: Graph, h: Graph, model: BranchSets | None = None
) -> SubdivisionEmbedding | None:
    """Subdivision of a max-degree-3 pattern built from a minimal minor witness.

    Returns ``None`` exactly when ``h`` is not a minor of ``g``.
    """
    top = max_degree(h)
    if top > 3:
        raise PreconditionError(f"pattern has maximum degree {top}; construction needs <= 3")
    witness = minimize_minor_witness(g, h, model)
    if witness is None:
        return None
    return subdivision_from_witness(witness)
