"""Minor containment through branch sets.

A model of ``h`` in ``g`` is a list of disjoint nonempty connected vertex sets
of ``g``, one per vertex of ``h``, with an edge of ``g`` between the sets of
every pair of adjacent pattern vertices. Models are searched for exactly by
backtracking, converted into explicit edit sequences, and shrunk to minimal
witnesses whose branch sets are trees.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .graph import (
    Edge,
    EditStep,
    Graph,
    GraphError,
    GuardError,
    apply_edit_with_map,
    subgraph_with_labels,
)


@dataclass(frozen=True)
class BranchSets:
    """``sets[i]`` is the branch set in ``host`` of pattern vertex ``i``."""

    host: Graph
    pattern: Graph
    sets: tuple[frozenset[int], ...]

    def owner(self) -> dict[int, int]:
        return {v: i for i, s in enumerate(self.sets) for v in s}


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _to_mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _connected_mask(adj: tuple[int, ...], mask: int) -> bool:
    if not mask:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= adj[v]
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def verify_model(m: BranchSets) -> bool:
    """Check the sets themselves, then one cross edge per pattern edge."""
    g, h = m.host, m.pattern
    for s in m.sets:
        for v in s:
            if not (isinstance(v, int) and 0 <= v < g.n):
                raise GraphError(f"vertex {v!r} not in host with n={g.n}")
    if len(m.sets) != h.n:
        return False
    masks = [_to_mask(s) for s in m.sets]
    union = 0
    for mask in masks:
        if not mask or union & mask:
            return False
        union |= mask
        if not _connected_mask(g.masks, mask):
            return False
    for i, j in h.edges:
        reach = 0
        for v in _bits(masks[i]):
            reach |= g.masks[v]
        if not reach & masks[j]:
            return False
    return True


# ---------------------------------------------------------------- search


def _pattern_order(h: Graph) -> list[int]:
    """Highest degree first, then greedily the vertex with most placed neighbours."""
    placed: list[int] = []
    rest = set(h.vertices())
    while rest:
        def key(v):
            linked = sum(1 for w in h.neighbors(v) if w not in rest)
            return (-linked, -len(h.neighbors(v)), v)
        v = min(rest, key=key)
        placed.append(v)
        rest.discard(v)
    return placed


def _grow_sets(adj, seeds: int, allowed: int, cap: int) -> list[int]:
    """All connected masks inside ``allowed`` that meet ``seeds``, of size <= cap.

    Each set is produced once, from the lowest seed it contains.
    """
    out: list[int] = []

    def grow(current: int, ext: int, banned: int, size: int, region: int) -> None:
        out.append(current)
        if size == cap:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            v = low.bit_length() - 1
            grow(current | low, (ext | adj[v]) & region & ~current & ~low & ~banned,
                 banned, size + 1, region)
            banned |= low

    used_seeds = 0
    for s in _bits(seeds):
        low = 1 << s
        region = allowed & ~used_seeds
        grow(low, adj[s] & region & ~low, 0, 1, region)
        used_seeds |= low
    out.sort(key=lambda mask: (mask.bit_count(), mask))
    return out


class _ModelSearch:
    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.adj = g.masks
        self.order = _pattern_order(h)
        position = {v: i for i, v in enumerate(self.order)}
        self.earlier = [
            sorted((w for w in h.neighbors(p) if position[w] < i), key=position.get)
            for i, p in enumerate(self.order)
        ]
        # after placing order[i]: placed vertices that still wait for neighbours
        self.pending = []
        for i in range(len(self.order)):
            waits = []
            for q in self.order[: i + 1]:
                r = sum(1 for w in h.neighbors(q) if position[w] > i)
                if r:
                    waits.append((q, r))
            self.pending.append(waits)
        self.sets = [0] * h.n
        self.reach = [0] * h.n
        self._nbr_cache: dict[int, int] = {}

    def nbr(self, mask: int) -> int:
        out = self._nbr_cache.get(mask)
        if out is None:
            out = 0
            for v in _bits(mask):
                out |= self.adj[v]
            out &= ~mask
            self._nbr_cache[mask] = out
        return out

    def run(self) -> list[int] | None:
        full = (1 << self.g.n) - 1
        if self.search(0, full):
            return list(self.sets)
        return None

    def search(self, pos: int, avail: int) -> bool:
        if pos == len(self.order):
            return True
        p = self.order[pos]
        remaining = len(self.order) - pos - 1
        cap = avail.bit_count() - remaining
        if cap < 1:
            return False
        earlier = self.earlier[pos]
        seeds = self.reach[earlier[0]] & avail if earlier else avail
        if not seeds:
            return False
        for b in _grow_sets(self.adj, seeds, avail, cap):
            reach = self.nbr(b)
            if any(not reach & self.sets[q] for q in earlier[1:]):
                continue
            rest = avail & ~b
            self.sets[p] = b
            self.reach[p] = reach
            if all((self.reach[q] & rest).bit_count() >= r for q, r in self.pending[pos]):
                if self.search(pos + 1, rest):
                    return True
        self.sets[p] = 0
        self.reach[p] = 0
        return False


def find_minor_model(g: Graph, h: Graph) -> BranchSets | None:
    """First model of ``h`` in ``g`` in a fixed search order, or ``None``.

    Pattern vertices are placed highest degree first; candidate branch sets
    are tried smallest first, ties broken by bitmask value.
    """
    if h.n > g.n or h.m > g.m:
        return None
    found = _ModelSearch(g, h).run()
    if found is None:
        return None
    sets = tuple(frozenset(_bits(mask)) for mask in found)
    return BranchSets(g, h, sets)


def has_minor(g: Graph, h: Graph) -> bool:
    return find_minor_model(g, h) is not None


# ---------------------------------------------------------------- edit sequences


def _spanning_tree_edges(g: Graph, vertices: frozenset[int]) -> list[Edge]:
    root = min(vertices)
    seen = {root}
    queue = deque([root])
    out = []
    while queue:
        a = queue.popleft()
        for b in sorted(g.neighbors(a)):
            if b in vertices and b not in seen:
                seen.add(b)
                out.append((a, b))
                queue.append(b)
    return out


def model_to_edit_sequence(m: BranchSets) -> list[EditStep]:
    """Edits turning the host into a graph isomorphic to the pattern.

    Uncovered vertices are deleted (highest label first), then a spanning tree
    of every branch set is contracted, then edges between merged vertices whose
    pattern vertices are non-adjacent are deleted. Labels in each step refer to
    the graph the step is applied to.
    """
    if not verify_model(m):
        raise GraphError("model does not verify")
    g = m.host
    steps: list[EditStep] = []
    label = {v: v for v in g.vertices()}
    covered = set().union(*m.sets)
    for v in sorted(set(g.vertices()) - covered, reverse=True):
        step = EditStep.delete_vertex(label[v])
        g, relabel = apply_edit_with_map(g, step)
        steps.append(step)
        label = {w: relabel[x] for w, x in label.items() if relabel[x] is not None}
    for s in m.sets:
        for a, b in _spanning_tree_edges(m.host, s):
            step = EditStep.contract(label[a], label[b])
            g, relabel = apply_edit_with_map(g, step)
            steps.append(step)
            label = {w: relabel[x] for w, x in label.items()}
    merged = [label[min(s)] for s in m.sets]
    owner = {v: i for i, v in enumerate(merged)}
    for a, b in g.sorted_edges():
        if not m.pattern.has_edge(owner[a], owner[b]):
            steps.append(EditStep.delete_edge(a, b))
    return steps


# ---------------------------------------------------------------- minimal witnesses


@dataclass(frozen=True)
class MinimalWitness:
    """Subgraph of the original host, in host labels, with a model over it.

    No vertex or edge of the subgraph can be removed without losing the minor.
    """

    host: Graph
    pattern: Graph
    vertices: frozenset[int]
    edges: frozenset[Edge]
    sets: tuple[frozenset[int], ...]

    @cached_property
    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def cross_edges(self, i: int, j: int) -> list[Edge]:
        si, sj = self.sets[i], self.sets[j]
        return sorted(
            (a, b) if a in si else (b, a)
            for a, b in self.edges
            if (a in si and b in sj) or (a in sj and b in si)
        )

    def as_graph(self) -> tuple[Graph, list[int]]:
        return subgraph_with_labels(self.host, self.vertices, self.edges)

    def model(self) -> BranchSets:
        """The witness model with the full host as its host graph."""
        return BranchSets(self.host, self.pattern, self.sets)


def _support(m: BranchSets) -> tuple[set[int], set[Edge]]:
    """Vertices and edges a model actually needs: spanning trees plus one cross edge per pattern edge."""
    g = m.host
    vertices = set().union(*m.sets)
    edges: set[Edge] = set()
    for s in m.sets:
        edges.update((min(a, b), max(a, b)) for a, b in _spanning_tree_edges(g, s))
    for i, j in m.pattern.sorted_edges():
        cross = sorted(
            (min(a, b), max(a, b)) for a in sorted(m.sets[i]) for b in g.neighbors(a) if b in m.sets[j]
        )
        edges.add(cross[0])
    return vertices, edges


def _model_in(g: Graph, h: Graph, vertices, edges):
    sub, labels = subgraph_with_labels(g, vertices, edges)
    found = find_minor_model(sub, h)
    if found is None:
        return None
    return tuple(frozenset(labels[v] for v in s) for s in found.sets)


def minimize_minor_witness(
    g: Graph, h: Graph, model: BranchSets | None = None
) -> MinimalWitness | None:
    """Shrink ``g`` to a subgraph that holds ``h`` as a minor but no proper subgraph does.

    Starting from ``model`` (or a searched one) the graph is first cut down to
    what that model uses; then single edges, lowest first, and afterwards
    single vertices are removed whenever a fresh search still finds ``h``.
    Since minors pass to supergraphs, a graph where no single deletion keeps
    the minor has no proper subgraph that does.
    """
    if model is None:
        model = find_minor_model(g, h)
        if model is None:
            return None
    elif model.host != g or model.pattern != h or not verify_model(model):
        raise GraphError("starting model is not a verified model of h in g")
    vertices, edges = _support(model)
    # a deletion that fails once fails for every smaller subgraph, so one pass each suffices
    for e in sorted(edges):
        if _model_in(g, h, vertices, edges - {e}) is not None:
            edges.discard(e)
    for v in sorted(vertices):
        if len(vertices) == 1:
            break
        rest_edges = {e for e in edges if v not in e}
        if _model_in(g, h, vertices - {v}, rest_edges) is not None:
            vertices.discard(v)
            edges = rest_edges
    final = _model_in(g, h, vertices, edges)
    assert final is not None
    return MinimalWitness(g, h, frozenset(vertices), frozenset(edges), final)


# ---------------------------------------------------------------- exhaustive oracle

ORACLE_MAX_N = 10
_CHUNK = 300_000


def _oracle_tables(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    size = 1 << g.n
    nbrs = np.zeros(size, dtype=np.int64)
    conn = np.zeros(size, dtype=bool)
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        nbrs[mask] = nbrs[mask ^ low] | g.masks[v]
        # flood fill inside mask
        seen = low
        while True:
            grown = seen
            for w in range(g.n):
                if seen >> w & 1:
                    grown |= g.masks[w] & mask
            if grown == seen:
                break
            seen = grown
        conn[mask] = seen == mask
    return conn, nbrs


@functools.lru_cache(maxsize=32)
def _label_masks(labels: int, width: int) -> tuple[np.ndarray, ...]:
    """For each label c >= 1, the bitmask of positions holding c, over all label strings."""
    digits = np.indices((labels,) * width, dtype=np.int64).reshape(width, -1)
    weights = np.int64(1) << np.arange(width, dtype=np.int64)
    out = []
    for c in range(1, labels):
        arr = ((digits == c).T * weights).sum(axis=1)
        arr.setflags(write=False)
        out.append(arr)
    return tuple(out)


def has_minor_oracle(g: Graph, h: Graph) -> bool:
    """Exhaustive check over every assignment of host vertices to a pattern vertex or to nothing.

    Shares no code with ``find_minor_model``. Exponential: ``(h.n + 1) ** g.n``
    assignments, evaluated in numpy blocks.
    """
    if g.n > ORACLE_MAX_N:
        raise GuardError(f"has_minor_oracle is limited to hosts with n <= {ORACLE_MAX_N}")
    n, k = g.n, h.n
    if k > n:
        return False
    conn, nbrs = _oracle_tables(g)
    labels = k + 1
    inner = n
    while inner > 1 and labels ** inner > _CHUNK:
        inner -= 1
    inner_masks = _label_masks(labels, inner)
    rows = len(inner_masks[0])
    for prefix in itertools.product(range(labels), repeat=n - inner):
        extra = [0] * k
        for offset, c in enumerate(prefix):
            if c:
                extra[c - 1] |= 1 << (inner + offset)
        masks = [inner_masks[c] | extra[c] for c in range(k)]
        ok = np.ones(rows, dtype=bool)
        for c in range(k):
            ok &= conn[masks[c]]
        for i, j in h.edges:
            ok &= (nbrs[masks[i]] & masks[j]) != 0
        if ok.any():
            return True
    return False
