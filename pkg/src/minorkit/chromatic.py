"""Exact colouring and clique minors forced by chromatic number."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .connectivity import fan, vertex_connectivity
from .graph import (
    Graph,
    GraphError,
    GuardError,
    LayerDecomposition,
    PreconditionError,
    all_graphs,
    bfs_layers,
    complete,
    components,
    induced_subgraph_with_labels,
    random_graph,
    shortest_path,
)
from .minors import BranchSets, find_minor_model, verify_model

COLOR_MAX_N = 16


@dataclass(frozen=True)
class Coloring:
    """Proper colouring with colours ``1..k``; ``colors[v]`` is the colour of ``v``."""

    colors: tuple[int, ...]
    k: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n or any(not 1 <= c <= self.k for c in self.colors):
            return False
        return all(self.colors[a] != self.colors[b] for a, b in g.edges)


def _max_clique(g: Graph) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & g.masks[v])

    expand(0, (1 << g.n) - 1)
    return best


def optimal_coloring(g: Graph) -> Coloring:
    """Minimum proper colouring by DSATUR branch and bound, with a clique lower bound."""
    if g.n > COLOR_MAX_N:
        raise GuardError(f"exact colouring is limited to n <= {COLOR_MAX_N}")
    n = g.n
    lower = _max_clique(g)
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    best_k = n + 1
    best: list[int] = list(range(1, n + 1))
    colors = [0] * n

    def pick() -> int:
        top, choice = (-1, -1), -1
        for v in range(n):
            if colors[v]:
                continue
            sat = len({colors[w] for w in adj[v] if colors[w]})
            key = (sat, len(adj[v]))
            if key > top:
                top, choice = key, v
        return choice

    def search(done: int, used: int) -> bool:
        nonlocal best_k, best
        if used >= best_k:
            return False
        if done == n:
            best_k, best = used, list(colors)
            return best_k == lower
        v = pick()
        taken = {colors[w] for w in adj[v]}
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            if search(done + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    search(0, 0)
    return Coloring(tuple(best), best_k)


def chromatic_number(g: Graph) -> int:
    return optimal_coloring(g).k


def odd_cycle_or_bipartition(g: Graph) -> list[int] | Coloring:
    """An odd cycle as a vertex list, or a proper colouring with at most two colours."""
    side = [0] * g.n
    parent: list[int | None] = [None] * g.n
    depth = [0] * g.n
    for s in g.vertices():
        if side[s]:
            continue
        side[s] = 1
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in sorted(g.neighbors(a)):
                if not side[b]:
                    side[b] = 3 - side[a]
                    parent[b] = a
                    depth[b] = depth[a] + 1
                    queue.append(b)
                elif side[b] == side[a]:
                    return _close_cycle(parent, depth, a, b)
    return Coloring(tuple(side), max(side))


def _close_cycle(parent, depth, a: int, b: int) -> list[int]:
    up, down = [a], [b]
    while depth[up[-1]] > depth[down[-1]]:
        up.append(parent[up[-1]])
    while depth[down[-1]] > depth[up[-1]]:
        down.append(parent[down[-1]])
    while up[-1] != down[-1]:
        up.append(parent[up[-1]])
        down.append(parent[down[-1]])
    return up + down[-2::-1]


# ---------------------------------------------------------------- K3 and K4


def extract_k3(g: Graph) -> BranchSets:
    """Triangle minor from an odd cycle: two arcs and one vertex."""
    found = odd_cycle_or_bipartition(g)
    if isinstance(found, Coloring):
        raise PreconditionError(f"graph is {found.k}-colourable; a K3 minor needs chromatic number >= 3")
    ring = found
    cut = len(ring) // 2
    sets = (frozenset(ring[:cut]), frozenset(ring[cut:-1]), frozenset(ring[-1:]))
    return BranchSets(g, complete(3), sets)


def _best_component(g: Graph) -> tuple[frozenset[int], int]:
    """Component of largest chromatic number, lowest label on ties."""
    best, best_chi = None, 0
    for comp in components(g):
        sub, _ = induced_subgraph_with_labels(g, comp)
        chi = chromatic_number(sub)
        if chi > best_chi:
            best, best_chi = comp, chi
    return best, best_chi


def _lift(sets, labels) -> list[frozenset[int]]:
    return [frozenset(labels[v] for v in s) for s in sets]


def _separating_pair(g: Graph) -> tuple[int, int]:
    for x, y in combinations(g.vertices(), 2):
        rest = [v for v in g.vertices() if v not in (x, y)]
        sub, _ = induced_subgraph_with_labels(g, rest)
        if len(components(sub)) > 1:
            return x, y
    raise GraphError("no separating pair")


def _cycle_avoiding(g: Graph, banned: int) -> list[int]:
    """Some cycle of ``g - banned`` found through a BFS tree and one extra edge."""
    keep = [v for v in g.vertices() if v != banned]
    sub, labels = induced_subgraph_with_labels(g, keep)
    parent: dict[int, int | None] = {0: None}
    depth = {0: 0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in sorted(sub.neighbors(a)):
            if b not in parent:
                parent[b], depth[b] = a, depth[a] + 1
                queue.append(b)
    for a, b in sub.sorted_edges():
        if parent.get(a) != b and parent.get(b) != a:
            ring = _close_cycle(parent, depth, a, b)
            return [labels[v] for v in ring]
    raise GraphError("graph minus a vertex is acyclic")


def _k4_sets(g: Graph) -> list[frozenset[int]]:
    """Branch sets of a K4 minor; ``g`` must have chromatic number at least 4."""
    if g.n == 4:
        return [frozenset({v}) for v in g.vertices()]
    comps = components(g)
    if len(comps) > 1:
        comp, _ = _best_component(g)
        sub, labels = induced_subgraph_with_labels(g, comp)
        return _lift(_k4_sets(sub), labels)
    kappa = vertex_connectivity(g)
    if kappa == 1:
        for c in g.vertices():
            rest = [v for v in g.vertices() if v != c]
            sub, labels = induced_subgraph_with_labels(g, rest)
            parts = components(sub)
            if len(parts) > 1:
                break
        for part in parts:
            side, side_labels = induced_subgraph_with_labels(g, {labels[v] for v in part} | {c})
            if chromatic_number(side) >= 4:
                return _lift(_k4_sets(side), side_labels)
        raise AssertionError("no side of the cut vertex keeps chromatic number 4")
    if kappa == 2:
        return _k4_two_separator(g)
    return _k4_three_connected(g)


def _k4_two_separator(g: Graph) -> list[frozenset[int]]:
    x, y = _separating_pair(g)
    rest = [v for v in g.vertices() if v not in (x, y)]
    sub, labels = induced_subgraph_with_labels(g, rest)
    parts = components(sub)
    first = {labels[v] for v in parts[0]}
    second = set(rest) - first
    for side, other in ((first, second), (second, first)):
        verts = sorted(side | {x, y})
        plus, side_labels = induced_subgraph_with_labels(g, verts)
        index = {v: i for i, v in enumerate(side_labels)}
        plus = Graph(plus.n, set(plus.edges) | {(index[x], index[y])})
        if chromatic_number(plus) < 4:
            continue
        sets = _lift(_k4_sets(plus), side_labels)
        if g.has_edge(x, y):
            return sets
        # the missing edge xy is replaced by a shortest x-y path through the other side
        route = shortest_path(g, x, y, allowed=other)
        inner = set(route[1:-1])
        holder = next((k for k, s in enumerate(sets) if x in s), None)
        if holder is None:
            holder = next((k for k, s in enumerate(sets) if y in s), None)
        if holder is not None:
            sets[holder] = sets[holder] | inner
        return sets
    raise AssertionError("neither side of the 2-separator keeps chromatic number 4")


def _k4_three_connected(g: Graph) -> list[frozenset[int]]:
    v = 0
    ring = _cycle_avoiding(g, v)
    spokes = fan(g, v, ring)
    if spokes is None or spokes.size < 3:
        raise AssertionError("3-connected graph without a 3-fan onto a cycle")
    chosen = spokes.paths[:3]
    hub = {v}
    for p in chosen:
        hub.update(p[1:-1])
    where = sorted(ring.index(p[-1]) for p in chosen)
    arcs = []
    for k in range(3):
        start, stop = where[k], where[(k + 1) % 3]
        span = (stop - start) % len(ring) or len(ring)
        arcs.append(frozenset(ring[(start + t) % len(ring)] for t in range(span)))
    return [frozenset(hub)] + arcs


def extract_k4(g: Graph) -> BranchSets:
    """K4 minor following the connectivity case split on a 4-chromatic graph."""
    chi = chromatic_number(g)
    if chi < 4:
        raise PreconditionError(f"chromatic number is {chi}; a K4 minor needs >= 4")
    model = BranchSets(g, complete(4), tuple(_k4_sets(g)))
    if not verify_model(model):
        raise AssertionError("K4 construction produced an invalid model")
    return model


# ---------------------------------------------------------------- layers and K_k


@dataclass(frozen=True)
class LayerChoice:
    depth: int
    layers: LayerDecomposition
    coloring: Coloring

    @property
    def chi(self) -> int:
        return self.coloring.k


def max_chromatic_layer(g: Graph, x: int) -> LayerChoice:
    """Layer ``S_d(x)`` of largest chromatic number, smallest ``d`` on ties."""
    layers = bfs_layers(g, x)
    best = None
    for d, layer in enumerate(layers.layers):
        sub, _ = induced_subgraph_with_labels(g, layer)
        col = optimal_coloring(sub)
        if best is None or col.k > best[1].k:
            best = (d, col)
    return LayerChoice(best[0], layers, best[1])


@dataclass(frozen=True)
class TraceLevel:
    level: int  # size of the clique minor being built at this step
    root: int
    layer: int
    chi: int  # chromatic number of the chosen layer
    parent_chi: int  # chromatic number of the graph the layer was taken from


@dataclass(frozen=True)
class ExtractionTrace:
    levels: tuple[TraceLevel, ...]
    model: BranchSets


def extract_clique_minor(g: Graph, k: int) -> ExtractionTrace:
    """K_k minor from a graph with chromatic number at least ``2**k``.

    Recurse into the most colourful distance layer around the lowest vertex
    of the most colourful component; everything strictly inside that layer
    becomes one more branch set.
    """
    if k < 2:
        raise GraphError("k must be at least 2")
    chi = chromatic_number(g)
    if chi < 2 ** k:
        raise PreconditionError(f"chromatic number {chi} is below 2**{k} = {2 ** k}")
    levels: list[TraceLevel] = []
    sets = _clique_sets(g, list(g.vertices()), k, levels)
    model = BranchSets(g, complete(k), tuple(sets))
    if not verify_model(model):
        raise AssertionError("clique extraction produced an invalid model")
    return ExtractionTrace(tuple(levels), model)


def _clique_sets(g: Graph, labels: list[int], k: int, levels: list[TraceLevel]) -> list[frozenset[int]]:
    if k == 2:
        a, b = g.sorted_edges()[0]
        return [frozenset({labels[a]}), frozenset({labels[b]})]
    comp, chi = _best_component(g)
    sub, sub_labels = induced_subgraph_with_labels(g, comp)
    root = 0
    choice = max_chromatic_layer(sub, root)
    d = choice.depth
    levels.append(TraceLevel(k, labels[sub_labels[root]], d, choice.chi, chi))
    layer, layer_labels = induced_subgraph_with_labels(sub, choice.layers.layers[d])
    to_top = [labels[sub_labels[v]] for v in layer_labels]
    inner = _clique_sets(layer, to_top, k - 1, levels)
    outer = frozenset(labels[sub_labels[v]] for v in choice.layers.inner(d))
    return inner + [outer]


# ---------------------------------------------------------------- Hadwiger scan

EXHAUSTIVE_MAX_N = 6


@dataclass
class HadwigerReport:
    graphs: int = 0
    checks: int = 0
    checks_by_k: dict[int, int] = field(default_factory=dict)
    counterexamples: list[tuple[Graph, int]] = field(default_factory=list)

    def summary(self) -> str:
        lines = [f"graphs scanned: {self.graphs}", f"checks: {self.checks}"]
        for k in sorted(self.checks_by_k):
            lines.append(f"k={k}: {self.checks_by_k[k]} graphs with chromatic number >= {k}")
        lines.append(f"counterexamples: {len(self.counterexamples)}")
        return "\n".join(lines)


def hadwiger_scan(
    n_max: int,
    k_max: int,
    exhaustive: bool = True,
    samples: int = 0,
    seed: int | None = None,
    density: float = 0.5,
) -> HadwigerReport:
    """Check that chromatic number >= k forces a K_k minor, for 2 <= k <= k_max.

    Exhaustive mode visits every labelled graph on 1..n_max vertices.
    Sampling mode draws ``samples`` random graphs on ``n_max`` vertices and
    needs an explicit ``seed``.
    """
    if exhaustive:
        if n_max > EXHAUSTIVE_MAX_N:
            raise GuardError(f"exhaustive scan is limited to n_max <= {EXHAUSTIVE_MAX_N}")
        source = (g for n in range(1, n_max + 1) for g in all_graphs(n))
    else:
        if seed is None:
            raise GraphError("sampling mode needs a seed")
        rng = random.Random(seed)
        source = (random_graph(n_max, density, rng) for _ in range(samples))
    report = HadwigerReport()
    cliques = {k: complete(k) for k in range(2, k_max + 1)}
    for g in source:
        report.graphs += 1
        chi = chromatic_number(g)
        for k in range(2, min(chi, k_max) + 1):
            report.checks += 1
            report.checks_by_k[k] = report.checks_by_k.get(k, 0) + 1
            if find_minor_model(g, cliques[k]) is None:
                report.counterexamples.append((g, k))
    return report
