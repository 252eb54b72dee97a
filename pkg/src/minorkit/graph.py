"""Finite simple undirected graphs on dense labels 0..n-1.

Graphs are immutable. Every edit returns a new graph; the ``*_with_map``
variants also return how old labels map to new ones so that certificates
can be carried across edits.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Domain error: a graph operation was given input outside its domain."""


class PreconditionError(GraphError):
    """A construction was called on input that lacks its required property."""


class GuardError(GraphError):
    """An exponential-time routine refused an instance above its size guard."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple graph with ``n >= 1`` vertices labelled ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise GraphError(f"a graph needs at least one vertex, got n={n!r}")
        norm = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            norm.add(_norm(u, v))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(
            self, "_masks", tuple(sum(1 << w for w in a) for a in adj)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def vertices(self) -> range:
        return range(self._n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def mask(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask."""
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and _norm(u, v) in self._edges

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise GraphError(f"vertex {v!r} not in graph with n={self._n}")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.sorted_edges()})"

    def __reduce__(self):
        return (Graph, (self._n, self.sorted_edges()))


# ---------------------------------------------------------------- edits


@dataclass(frozen=True)
class EditStep:
    """One minor operation; ``kind`` is one of ``KINDS``."""

    kind: str
    u: int
    v: int | None = None

    KINDS = ("delete-vertex", "delete-edge", "contract")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise GraphError(f"unknown edit kind {self.kind!r}")
        if (self.kind == "delete-vertex") != (self.v is None):
            raise GraphError(f"malformed edit step {self!r}")

    @classmethod
    def delete_vertex(cls, v: int) -> EditStep:
        return cls("delete-vertex", v)

    @classmethod
    def delete_edge(cls, u: int, v: int) -> EditStep:
        return cls("delete-edge", *_norm(u, v))

    @classmethod
    def contract(cls, u: int, v: int) -> EditStep:
        return cls("contract", *_norm(u, v))

    def __str__(self):
        if self.v is None:
            return f"{self.kind} {self.u}"
        return f"{self.kind} {self.u} {self.v}"


def _compact(g: Graph, removed: int, edges: Iterable[Edge]) -> tuple[Graph, list[int | None]]:
    relabel: list[int | None] = [w if w < removed else w - 1 for w in range(g.n)]
    relabel[removed] = None
    new_edges = [(relabel[a], relabel[b]) for a, b in edges]
    return Graph(g.n - 1, new_edges), relabel


def apply_edit_with_map(g: Graph, step: EditStep) -> tuple[Graph, list[int | None]]:
    """Apply ``step`` and return ``(graph, relabel)``.

    ``relabel[old]`` is the new label of ``old`` or ``None`` if the vertex was
    deleted. Labels above a removed vertex shift down by one. A contraction
    keeps the smaller endpoint and maps the larger one onto it.
    """
    if step.kind == "delete-vertex":
        v = step.u
        g._check_vertex(v)
        if g.n == 1:
            raise GraphError("cannot delete the last vertex of a graph")
        return _compact(g, v, (e for e in g.edges if v not in e))
    u, v = step.u, step.v
    g._check_vertex(u)
    g._check_vertex(v)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if step.kind == "delete-edge":
        edges = g.edges - {_norm(u, v)}
        return Graph(g.n, edges), list(range(g.n))
    keep, gone = min(u, v), max(u, v)
    edges = [e for e in g.edges if gone not in e]
    edges += [_norm(keep, w) for w in g.neighbors(gone) if w != keep]
    out, relabel = _compact(g, gone, set(edges))
    relabel[gone] = relabel[keep]
    return out, relabel


def apply_edit(g: Graph, step: EditStep) -> Graph:
    return apply_edit_with_map(g, step)[0]


def apply_edits(g: Graph, steps: Iterable[EditStep]) -> Graph:
    for step in steps:
        g = apply_edit(g, step)
    return g


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge ``uv`` by a path ``u - n - v`` through the new vertex ``n``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    w = g.n
    edges = (g.edges - {_norm(u, v)}) | {(u, w), (v, w)}
    return Graph(g.n + 1, edges)


# ---------------------------------------------------------------- queries


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    return max(len(g.neighbors(v)) for v in g.vertices())


def degrees(g: Graph) -> list[int]:
    return [len(g.neighbors(v)) for v in g.vertices()]


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in g.vertices():
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.neighbors(a):
                if not seen[b]:
                    seen[b] = True
                    comp.add(b)
                    queue.append(b)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def leaves(g: Graph) -> list[int]:
    return [v for v in g.vertices() if len(g.neighbors(v)) == 1]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``g[S]`` relabelled so that ``sorted(S)[i]`` becomes ``i``."""
    return induced_subgraph_with_labels(g, vertices)[0]


def induced_subgraph_with_labels(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    labels = sorted(set(vertices))
    if not labels:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in labels:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(labels)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(labels), edges), labels


def subgraph_with_labels(
    g: Graph, vertices: Iterable[int], edges: Iterable[Edge]
) -> tuple[Graph, list[int]]:
    """Subgraph on ``vertices`` keeping only ``edges``, compacted like ``induced_subgraph``."""
    labels = sorted(set(vertices))
    if not labels:
        raise GraphError("subgraph needs a nonempty vertex set")
    index = {v: i for i, v in enumerate(labels)}
    out = []
    for a, b in edges:
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge of the host")
        if a not in index or b not in index:
            raise GraphError(f"edge ({a}, {b}) leaves the chosen vertex set")
        out.append((index[a], index[b]))
    return Graph(len(labels), out), labels


def shortest_path(g: Graph, source: int, target: int, allowed: Iterable[int] | None = None) -> list[int] | None:
    """BFS path from ``source`` to ``target`` whose interior stays in ``allowed``."""
    inside = None if allowed is None else set(allowed)
    parent = {source: None}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        if a == target:
            break
        for b in sorted(g.neighbors(a)):
            if b in parent:
                continue
            if b != target and inside is not None and b not in inside:
                continue
            parent[b] = a
            queue.append(b)
    if target not in parent:
        return None
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


# ---------------------------------------------------------------- layers


@dataclass(frozen=True)
class LayerDecomposition:
    """Distance shells ``S_0(x), ..., S_D(x)`` around ``root``."""

    root: int
    layers: tuple[frozenset[int], ...]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def layer_of(self, v: int) -> int:
        for d, layer in enumerate(self.layers):
            if v in layer:
                return d
        raise GraphError(f"vertex {v} not in any layer")

    def inner(self, d: int) -> frozenset[int]:
        """Union of the layers strictly below ``d``."""
        return frozenset().union(*self.layers[:d])


def bfs_layers(g: Graph, x: int) -> LayerDecomposition:
    g._check_vertex(x)
    dist = {x: 0}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        for b in g.neighbors(a):
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    if len(dist) != g.n:
        raise GraphError("layers are only defined for connected graphs")
    depth = max(dist.values())
    layers = [set() for _ in range(depth + 1)]
    for v, d in dist.items():
        layers[d].add(v)
    return LayerDecomposition(x, tuple(frozenset(s) for s in layers))


# ---------------------------------------------------------------- constructors


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete(n) needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}``; the first side is ``0..a-1``."""
    if a < 1 or b < 1:
        raise GraphError("complete_bipartite(a, b) needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle(n) needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path(n) needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def wheel(k: int) -> Graph:
    """Cycle ``0..k-1`` plus hub ``k`` joined to every rim vertex."""
    if k < 3:
        raise GraphError("wheel(k) needs k >= 3")
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph(k + 1, rim + [(i, k) for i in range(k)])


def petersen() -> Graph:
    """Outer 5-cycle ``u_i -> i``, inner pentagram ``v_i -> 5 + i``."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + i))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


# ---------------------------------------------------------------- isomorphism helpers


def _refined_order(g: Graph) -> list[int]:
    return sorted(g.vertices(), key=lambda v: (-len(g.neighbors(v)), v))


def isomorphism(g: Graph, h: Graph, max_n: int = 8) -> list[int] | None:
    """Brute-force isomorphism ``g -> h`` as a list ``phi[v]``, or ``None``."""
    if g.n != h.n or g.m != h.m:
        return None
    if g.n > max_n:
        raise GuardError(f"isomorphism search is limited to n <= {max_n}")
    if sorted(degrees(g)) != sorted(degrees(h)):
        return None
    order = _refined_order(g)
    phi: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        dv = len(g.neighbors(v))
        for w in h.vertices():
            if w in used or len(h.neighbors(w)) != dv:
                continue
            if all(g.has_edge(v, a) == h.has_edge(w, b) for a, b in phi.items()):
                phi[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del phi[v]
                used.discard(w)
        return False

    if not extend(0):
        return None
    return [phi[v] for v in g.vertices()]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return isomorphism(g, h) is not None


def canonical_form(g: Graph, max_n: int = 8) -> tuple[int, tuple[Edge, ...]]:
    """Lexicographically least relabelled edge list over all permutations."""
    if g.n > max_n:
        raise GuardError(f"canonical form is limited to n <= {max_n}")
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(_norm(perm[a], perm[b]) for a, b in g.edges))
        if best is None or key < best:
            best = key
    return g.n, best


def find_subgraph(g: Graph, h: Graph) -> list[int] | None:
    """Injective map ``phi`` with ``phi(a)phi(b) in E(g)`` for every edge ``ab`` of ``h``."""
    if h.n > g.n or h.m > g.m:
        return None
    order = _refined_order(h)
    phi: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        dv = len(h.neighbors(v))
        for w in g.vertices():
            if w in used or len(g.neighbors(w)) < dv:
                continue
            if all(g.has_edge(phi[a], w) for a in h.neighbors(v) if a in phi):
                phi[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del phi[v]
                used.discard(w)
        return False

    if not extend(0):
        return None
    return [phi[v] for v in h.vertices()]


# ---------------------------------------------------------------- generators


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, ``2**(n choose 2)`` of them."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def nonisomorphic_graphs(n: int) -> list[Graph]:
    seen = {}
    for g in all_graphs(n):
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return list(seen.values())


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def to_edge_list(g: Graph) -> str:
    """Edge-list text: header ``n m`` then one ``u v`` line per edge, ``u < v``."""
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
